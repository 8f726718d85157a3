"""
Report Module
Relatório de verificação: contagem de checagens e contraexemplos
Serializa para JSON ({lemma, instances, pass, counterexamples}) e para DataFrame
"""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List

import pandas as pd

from .. import __version__
from ..utils.logger import EventType, get_logger


def _plain(value: Any) -> Any:
    """Converte valores do motor em JSON simples"""
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return str(value)


@dataclass
class Report:
    """
    Resultado de uma verificação

    Attributes:
        lemma (str): Identificador da afirmação verificada
        instances (int): Número de checagens feitas
        counterexamples (list): Checagens que falharam (dicionários descritivos)
        params (dict): Semente, cotas e demais parâmetros da execução
    """
    lemma: str
    instances: int = 0
    counterexamples: List[Dict[str, Any]] = field(default_factory=list)
    params: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def check(self, condition: bool, **detail) -> bool:
        """
        Registra uma checagem

        Args:
            condition: Resultado da checagem
            **detail: Descrição gravada se a checagem falhar

        Returns:
            bool: condition
        """
        self.instances += 1
        if not condition:
            self.counterexamples.append(_plain(detail))
            get_logger().log_event(EventType.VERIFICATION, f"Falha em {self.lemma}", _plain(detail))
        return condition

    def merge(self, other: "Report") -> "Report":
        """Acrescenta as checagens de outro relatório (prefixando o lema)"""
        self.instances += other.instances
        for ce in other.counterexamples:
            self.counterexamples.append({"lemma": other.lemma, **ce})
        return self

    def to_json(self) -> Dict[str, Any]:
        return {
            "lemma": self.lemma,
            "instances": self.instances,
            "pass": self.passed,
            "counterexamples": self.counterexamples,
            "params": _plain(self.params),
            "version": __version__,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), ensure_ascii=False, indent=2)

    def to_frame(self) -> pd.DataFrame:
        """
        Resumo tabular

        Returns:
            DataFrame: Uma linha com o resumo, seguida de uma linha por contraexemplo
        """
        rows = [{"lemma": self.lemma, "instances": self.instances,
                 "pass": self.passed, "failures": len(self.counterexamples), "detail": ""}]
        for ce in self.counterexamples:
            rows.append({"lemma": ce.get("lemma", self.lemma), "instances": None, "pass": False,
                         "failures": None, "detail": json.dumps(ce, ensure_ascii=False)})
        return pd.DataFrame(rows)
