"""
Logger Module
Sistema de logging estruturado do motor de álgebra diferencial
Registra bases de Gröbner, fechos diferenciais, cadeias de p# e suítes de verificação
"""

import json
import logging
import os
from datetime import datetime
from enum import Enum
from typing import Any, Dict, Optional


class LogLevel(Enum):
    """Níveis de log"""
    DEBUG = logging.DEBUG
    INFO = logging.INFO
    WARNING = logging.WARNING
    ERROR = logging.ERROR
    CRITICAL = logging.CRITICAL


class EventType(Enum):
    """Tipos de eventos do motor"""
    GROEBNER_BASIS = "groebner_basis"
    DELTA_CLOSURE = "delta_closure"
    PSHARP_STEP = "psharp_step"
    RADICAL_ROUND = "radical_round"
    VERIFICATION = "verification"
    SUITE_RESULT = "suite_result"
    RESOURCE_CAP = "resource_cap"
    SVDP_REDUCTION = "svdp_reduction"
    COMMAND = "command"


class EngineLogger:
    """
    Sistema de logging do motor

    Attributes:
        name (str): Nome do logger
        log_dir (str): Diretório dos logs (None = somente console)
    """

    def __init__(self, name: str = "DiffAlgebra", log_dir: Optional[str] = None,
                 console_level: LogLevel = LogLevel.WARNING):
        """
        Inicializa o sistema de logging

        Args:
            name: Nome do logger
            log_dir: Diretório para salvar logs e o diário JSON de eventos
            console_level: Nível mínimo exibido no console (stderr)
        """
        self.name = name
        self.log_dir = log_dir

        if log_dir is not None:
            os.makedirs(log_dir, exist_ok=True)

        self.logger = logging.getLogger(name)
        self.logger.setLevel(logging.DEBUG)
        self.logger.propagate = False

        # Remove handlers existentes
        self.logger.handlers.clear()

        self._setup_handlers(console_level)

    def _setup_handlers(self, console_level: LogLevel):
        """Configura handlers de log (arquivo e console)"""

        detailed_format = logging.Formatter(
            '%(asctime)s | %(name)s | %(levelname)s | %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S'
        )
        simple_format = logging.Formatter('%(levelname)s | %(message)s')

        if self.log_dir is not None:
            file_handler = logging.FileHandler(self.get_log_file_path(), encoding='utf-8')
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(detailed_format)
            self.logger.addHandler(file_handler)

        console_handler = logging.StreamHandler()
        console_handler.setLevel(console_level.value)
        console_handler.setFormatter(simple_format)
        self.logger.addHandler(console_handler)

    def set_console_level(self, level: LogLevel):
        """
        Ajusta o nível do handler de console

        Args:
            level: Novo nível
        """
        for handler in self.logger.handlers:
            if type(handler) is logging.StreamHandler:
                handler.setLevel(level.value)

    def debug(self, message: str, **kwargs):
        """Log de debug"""
        self.logger.debug(self._format_message(message, kwargs))

    def info(self, message: str, **kwargs):
        """Log de informação"""
        self.logger.info(self._format_message(message, kwargs))

    def warning(self, message: str, **kwargs):
        """Log de aviso"""
        self.logger.warning(self._format_message(message, kwargs))

    def error(self, message: str, **kwargs):
        """Log de erro"""
        self.logger.error(self._format_message(message, kwargs))

    def _accepts(self, level: LogLevel) -> bool:
        """True se algum handler aceita o nível"""
        return any(level.value >= h.level for h in self.logger.handlers)

    def _format_message(self, message: str, data: Dict[str, Any]) -> str:
        """
        Formata mensagem com dados adicionais

        Args:
            message: Mensagem base
            data: Dados adicionais

        Returns:
            str: Mensagem formatada
        """
        if data:
            data_str = " | ".join([f"{k}={v}" for k, v in data.items()])
            return f"{message} | {data_str}"
        return message

    def log_event(self, event_type: EventType, message: str, data: Optional[Dict[str, Any]] = None,
                  level: LogLevel = LogLevel.DEBUG):
        """
        Registra evento estruturado

        Args:
            event_type: Tipo do evento
            message: Mensagem
            data: Dados do evento
            level: Nível do registro
        """
        if self.log_dir is None and not self._accepts(level):
            return

        event = {
            'timestamp': datetime.now().isoformat(),
            'event_type': event_type.value,
            'message': message,
            'data': data or {}
        }

        self.logger.log(level.value,
                        self._format_message(f"[{event_type.value.upper()}] {message}", event['data']))

        if self.log_dir is not None:
            self._save_event_json(event)

    def _save_event_json(self, event: Dict[str, Any]):
        """
        Acrescenta evento ao diário JSON (uma linha por evento)

        Args:
            event: Evento para salvar
        """
        today = datetime.now().strftime('%Y-%m-%d')
        json_file = os.path.join(self.log_dir, f'{self.name}_events_{today}.jsonl')
        with open(json_file, 'a', encoding='utf-8') as f:
            f.write(json.dumps(event, ensure_ascii=False, default=str) + "\n")

    def log_groebner(self, n_gens: int, basis_size: int, pairs: int, order: str):
        """
        Registra o cálculo de uma base de Gröbner

        Args:
            n_gens: Número de geradores de entrada
            basis_size: Tamanho da base reduzida
            pairs: Pares S processados
            order: Ordem monomial
        """
        self.log_event(
            EventType.GROEBNER_BASIS,
            "Base de Gröbner reduzida",
            {'gens': n_gens, 'basis': basis_size, 'pairs': pairs, 'order': order}
        )

    def log_psharp_step(self, step: int, n_gens: int, window_dim: int, kernel_dim: int):
        """
        Registra um passo da cadeia J_k de p#

        Args:
            step: Índice k
            n_gens: Geradores de J_k
            window_dim: Dimensão de J_k na janela de grau
            kernel_dim: Dimensão do núcleo calculado
        """
        self.log_event(
            EventType.PSHARP_STEP,
            f"Passo {step} da trajetória",
            {'gens': n_gens, 'window_dim': window_dim, 'kernel_dim': kernel_dim}
        )

    def log_suite_result(self, suite: str, instances: int, passed: bool, failures: int):
        """
        Registra o resultado de uma suíte de verificação

        Args:
            suite: Nome da suíte
            instances: Número de verificações
            passed: Se todas passaram
            failures: Número de contraexemplos
        """
        self.log_event(
            EventType.SUITE_RESULT,
            f"Suíte {suite} {'OK' if passed else 'FALHOU'}",
            {'suite': suite, 'instances': instances, 'failures': failures},
            level=LogLevel.INFO if passed else LogLevel.WARNING
        )

    def get_log_file_path(self) -> Optional[str]:
        """
        Retorna caminho do arquivo de log atual

        Returns:
            str: Caminho do arquivo (None sem log_dir)
        """
        if self.log_dir is None:
            return None
        today = datetime.now().strftime('%Y-%m-%d')
        return os.path.join(self.log_dir, f'{self.name}_{today}.log')


# Singleton global
_global_logger: Optional[EngineLogger] = None


def get_logger(name: str = "DiffAlgebra") -> EngineLogger:
    """
    Obtém instância global do logger

    Args:
        name: Nome do logger

    Returns:
        EngineLogger: Instância do logger
    """
    global _global_logger

    if _global_logger is None:
        _global_logger = EngineLogger(name)

    return _global_logger


def configure_logger(log_dir: Optional[str] = None, console_level: LogLevel = LogLevel.WARNING,
                     name: str = "DiffAlgebra") -> EngineLogger:
    """
    Recria o logger global (usado pela CLI)

    Args:
        log_dir: Diretório de logs
        console_level: Nível do console
        name: Nome do logger

    Returns:
        EngineLogger: Novo logger global
    """
    global _global_logger
    _global_logger = EngineLogger(name, log_dir=log_dir, console_level=console_level)
    return _global_logger
