"""
Errors Module
Hierarquia de exceções do motor de álgebra diferencial
Cada classe carrega o código de saída usado pela CLI
"""

from typing import Optional


class EngineError(Exception):
    """Erro base do motor (código de saída 1)"""
    exit_code = 1


class RingMismatchError(EngineError, ValueError):
    """Polinômios ou ideais de anéis diferentes"""


class CharacteristicError(EngineError, ValueError):
    """Operação não suportada na característica do anel"""


class ResourceCapError(EngineError, RuntimeError):
    """Limite de grau, termos ou base de Gröbner excedido"""
    exit_code = 3

    def __init__(self, message: str, cap: str = "", value: Optional[int] = None):
        super().__init__(message)
        self.cap = cap
        self.value = value


class IllDefinedDerivationError(EngineError, ValueError):
    """Derivação não passa ao quociente: ∂(Q) ⊄ Q"""


class NonCommutingError(EngineError, ValueError):
    """Operação exige um Δ-anel parcial (derivações que comutam)"""


class ZeroDivisorArgumentError(EngineError, ValueError):
    """Argumento nulo ou nilpotente onde se exige elemento regular"""


class NotInIdealError(EngineError, ValueError):
    """Elemento fora do ideal exigido pela pré-condição"""


class UncertifiedInputError(EngineError, ValueError):
    """Entrada sem o certificado de Δ-estabilidade exigido"""


class UsageError(EngineError):
    """Uso incorreto da linha de comando (código de saída 2)"""
    exit_code = 2


class SpecValidationError(UsageError):
    """JSON de anel ou de fixtures fora do esquema"""


class ParseError(UsageError):
    """
    Erro de sintaxe na gramática de polinômios

    Attributes:
        position (int): Posição (0-based) do erro no texto
    """

    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} (posição {position})")
        self.position = position
        self.text = text


class ProperIdealError(EngineError, ValueError):
    """Operação exige um ideal próprio (≠ (1))"""
