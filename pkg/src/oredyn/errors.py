"""Exception hierarchy shared by the library and the CLI."""


class DomainMismatchError(TypeError):
    """Arithmetic or a map was applied across two different coefficient rings."""


class TwistError(ValueError):
    """A (sigma, delta) pair fails the twisted Leibniz law or is not defined on the domain."""

    def __init__(self, message, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample


class HypothesisError(ValueError):
    """A checker was called on an instance that does not meet its hypothesis."""


class ResourceError(RuntimeError):
    """A formal power would exceed the configured coefficient ceiling."""


class LiteralSyntaxError(ValueError):
    """Malformed scalar or polynomial literal."""

    def __init__(self, message, text="", position=None):
        if position is not None:
            message = f"{message} at position {position} in {text!r}"
        super().__init__(message)
        self.text = text
        self.position = position
