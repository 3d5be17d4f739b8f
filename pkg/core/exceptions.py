"""
Exceções do toolkit Katsura

Cada erro carrega um `kind` estável, usado pela CLI para emitir uma linha
JSON em stderr e escolher o código de saída.
"""

from typing import Any, Dict, List, Optional, Union


class KatsuraError(Exception):
    """Erro base de todas as operações do pacote"""

    kind: str = "error"

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"kind": self.kind, "message": self.message}
        payload.update(self.details)
        return payload


class StructuralError(KatsuraError, ValueError):
    """Dados com forma inválida (dimensões, vértices, arestas inexistentes)"""

    kind = "structural"


class ValidationError(KatsuraError, ValueError):
    """Par (A,B) viola a Condição (0)"""

    kind = "validation"

    def __init__(self, violations: List[str]):
        super().__init__("; ".join(violations), violations=list(violations))
        self.violations = list(violations)


class CompositionError(KatsuraError, ValueError):
    kind = "composition"


class DomainError(KatsuraError, ValueError):
    """Operação chamada fora do seu domínio de definição"""

    kind = "domain"


class SemanticError(KatsuraError, ValueError):
    """Expressão bem formada mas que não faz sentido para o par carregado"""

    kind = "semantic"


class ParseError(KatsuraError, ValueError):
    """Erro de sintaxe com posição, token esperado e trecho da entrada"""

    kind = "parse"

    def __init__(self, message: str, position: int, expected: str, text: Union[str, bytes]):
        """
        Args:
            position: índice de caractere em `text` (ou de byte, se `text` for bytes);
                `self.position` é sempre o deslocamento em bytes UTF-8
        """
        if isinstance(text, bytes):
            offset = position
            excerpt = text[max(0, offset - 10): offset + 10].decode("utf-8", errors="replace")
        else:
            offset = len(text[:position].encode("utf-8"))
            excerpt = text[max(0, position - 10): position + 10]
        super().__init__(message, position=offset, expected=expected, excerpt=excerpt)
        self.position = offset
        self.expected = expected
        self.excerpt = excerpt


class UnrealizableWithSquareMatrices(KatsuraError, ValueError):
    """Grupos com postos livres diferentes não vêm de matrizes quadradas"""

    kind = "unrealizable"


class InternalError(KatsuraError, RuntimeError):
    """Falha de auto-verificação; nunca devolvemos um resultado não certificado"""

    kind = "internal"

    def __init__(self, message: str, diagnostics: Optional[Dict[str, Any]] = None):
        super().__init__(message, diagnostics=diagnostics or {})
