"""
Poly Grammar Module
Formato textual dos polinômios: tokenizador, parser descendente recursivo e impressão canônica
Literais inteiros e racionais a/b, identificadores, + - * ^ e parênteses; espaços são ignorados
"""

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence

from ..algebra.ideal import Ideal
from ..algebra.polynomial import Poly, PolyRing, format_poly
from ..tensor.ore import LinDiffOp
from ..utils.errors import ParseError, ZeroDivisorArgumentError

OPERATOR_SYMBOL = "D"


class TokenType(Enum):
    """Classes de tokens"""
    NUMBER = "number"
    IDENT = "ident"
    PLUS = "+"
    MINUS = "-"
    STAR = "*"
    SLASH = "/"
    CARET = "^"
    LPAREN = "("
    RPAREN = ")"
    COMMA = ","
    END = "end"


@dataclass(frozen=True)
class Token:
    type: TokenType
    text: str
    position: int


_SINGLE = {t.value: t for t in (TokenType.PLUS, TokenType.MINUS, TokenType.STAR, TokenType.SLASH,
                                TokenType.CARET, TokenType.LPAREN, TokenType.RPAREN, TokenType.COMMA)}


def tokenize(text: str) -> List[Token]:
    """
    Divide o texto em tokens

    Args:
        text: Expressão

    Returns:
        list: Tokens, terminando em END
    """
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token(TokenType.NUMBER, text[i:j], i))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token(TokenType.IDENT, text[i:j], i))
            i = j
        elif ch in _SINGLE:
            tokens.append(Token(_SINGLE[ch], ch, i))
            i += 1
        else:
            raise ParseError(f"Caractere inesperado {ch!r}", i, text)
    tokens.append(Token(TokenType.END, "", n))
    return tokens


class PolyParser:
    """
    Parser descendente recursivo

        expr  := term (('+' | '-') term)*
        term  := unary ('*' unary)*
        unary := ('+' | '-') unary | power
        power := atom ('^' NUMBER)?
        atom  := NUMBER ('/' NUMBER)? | IDENT | '(' expr ')'

    Attributes:
        ring (PolyRing): Anel que declara os identificadores
        text (str): Texto de entrada
    """

    def __init__(self, text: str, ring: PolyRing):
        self.ring = ring
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def _advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def _expect(self, kind: TokenType, what: str) -> Token:
        if self.current.type is not kind:
            self._fail(f"Esperado {what}")
        return self._advance()

    def _fail(self, message: str, token: Optional[Token] = None):
        token = token or self.current
        found = token.text or "fim do texto"
        raise ParseError(f"{message}, encontrado {found!r}", token.position, self.text)

    def parse(self) -> Poly:
        """Texto inteiro como um polinômio"""
        result = self.expr()
        if self.current.type is not TokenType.END:
            self._fail("Fim de expressão esperado")
        return result

    def parse_list(self) -> List[Poly]:
        """Lista separada por vírgulas, opcionalmente entre parênteses: (f1, f2) ou f1, f2"""
        if self.current.type is TokenType.END:
            return []
        wrapped = self._is_wrapped_list()
        if wrapped:
            self._advance()
        polys = [self.expr()]
        while self.current.type is TokenType.COMMA:
            self._advance()
            polys.append(self.expr())
        if wrapped:
            self._expect(TokenType.RPAREN, "')'")
        if self.current.type is not TokenType.END:
            self._fail("Fim da lista esperado")
        return polys

    def _is_wrapped_list(self) -> bool:
        """'(' inicial que casa com o ')' final"""
        if self.current.type is not TokenType.LPAREN:
            return False
        depth = 0
        for k in range(self.pos, len(self.tokens)):
            kind = self.tokens[k].type
            if kind is TokenType.LPAREN:
                depth += 1
            elif kind is TokenType.RPAREN:
                depth -= 1
                if depth == 0:
                    return self.tokens[k + 1].type is TokenType.END
        return False

    def expr(self) -> Poly:
        result = self.term()
        while self.current.type in (TokenType.PLUS, TokenType.MINUS):
            op = self._advance()
            rhs = self.term()
            result = result + rhs if op.type is TokenType.PLUS else result - rhs
        return result

    def term(self) -> Poly:
        result = self.unary()
        while True:
            if self.current.type is TokenType.STAR:
                self._advance()
                result = result * self.unary()
            elif self.current.type is TokenType.SLASH:
                self._fail("Divisão só é permitida entre literais inteiros")
            else:
                return result

    def unary(self) -> Poly:
        if self.current.type is TokenType.MINUS:
            self._advance()
            return -self.unary()
        if self.current.type is TokenType.PLUS:
            self._advance()
            return self.unary()
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self.current.type is TokenType.CARET:
            self._advance()
            if self.current.type is not TokenType.NUMBER:
                self._fail("Expoente deve ser inteiro não negativo")
            base = base ** int(self._advance().text)
            if self.current.type is TokenType.CARET:
                self._fail("Potência encadeada exige parênteses")
        return base

    def atom(self) -> Poly:
        tok = self.current
        if tok.type is TokenType.NUMBER:
            self._advance()
            num = int(tok.text)
            den = 1
            if self.current.type is TokenType.SLASH:
                self._advance()
                den_tok = self._expect(TokenType.NUMBER, "denominador inteiro")
                den = int(den_tok.text)
                if den == 0:
                    raise ParseError("Denominador nulo", den_tok.position, self.text)
            try:
                return self.ring.constant(self.ring.field.from_rational(num, den))
            except ZeroDivisorArgumentError as exc:
                raise ParseError(str(exc), tok.position, self.text) from None
        if tok.type is TokenType.IDENT:
            self._advance()
            if not self.ring.has_variable(tok.text):
                raise ParseError(f"Variável desconhecida {tok.text!r}", tok.position, self.text)
            return self.ring.gen(tok.text)
        if tok.type is TokenType.LPAREN:
            self._advance()
            inner = self.expr()
            self._expect(TokenType.RPAREN, "')'")
            return inner
        self._fail("Esperado número, variável ou '('")


def parse_poly(text: str, ring: PolyRing) -> Poly:
    """
    Lê um polinômio

    Args:
        text: Expressão, por exemplo "x^2*y + 3/2"
        ring: Anel que declara os identificadores

    Returns:
        Poly: Polinômio exato
    """
    return PolyParser(text, ring).parse()


def parse_poly_list(text: str, ring: PolyRing) -> List[Poly]:
    """Lê "f1, f2, ..." ou "(f1, f2, ...)" """
    return PolyParser(text, ring).parse_list()


def parse_ideal(text: str, ring: PolyRing) -> Ideal:
    """Ideal gerado pela lista de polinômios do texto"""
    return Ideal(ring, parse_poly_list(text, ring))


def print_poly(f: Poly) -> str:
    """Forma canônica (termos em degrevlex decrescente)"""
    return format_poly(f)


def print_poly_list(polys: Sequence[Poly]) -> str:
    return "(" + ", ".join(format_poly(f) for f in polys) + ")" if polys else "(0)"


def parse_operator(text: str, K: PolyRing) -> LinDiffOp:
    """
    Lê um operador de K[∂] escrito na forma normal Σ a_i(t)·D^i (coeficientes à esquerda)

    O texto é lido como polinômio em t e D e cada potência de D vira uma ordem;
    produtos de operadores devem ser pedidos com ore_mul, não escritos no texto.

    Args:
        text: Expressão, por exemplo "t*D + 1"
        K: Anel univariado C[t]

    Returns:
        LinDiffOp: Operador
    """
    if K.has_variable(OPERATOR_SYMBOL):
        raise ParseError(f"{OPERATOR_SYMBOL!r} é reservado para ∂", 0, text)
    big = K.with_variables([OPERATOR_SYMBOL])
    f = parse_poly(text, big)
    di = big.index(OPERATOR_SYMBOL)
    coeffs = {}
    for mono, c in f.terms.items():
        rest = mono[:di] + mono[di + 1:]
        coeffs.setdefault(mono[di], {})[rest] = c
    return LinDiffOp(K, {i: Poly(K, terms) for i, terms in coeffs.items()})


def print_operator(L: LinDiffOp) -> str:
    """Forma normal Σ a_i·D^i, na mesma gramática aceita por parse_operator"""
    if L.is_zero():
        return "0"
    parts = []
    for i in sorted(L.coeffs, reverse=True):
        a = format_poly(L.coeffs[i])
        d = "" if i == 0 else (OPERATOR_SYMBOL if i == 1 else f"{OPERATOR_SYMBOL}^{i}")
        if not d:
            parts.append(a)
        elif a == "1":
            parts.append(d)
        else:
            parts.append(f"({a})*{d}")
    return " + ".join(parts)
