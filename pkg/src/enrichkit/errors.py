"""Exception hierarchy shared by every validator.

Axiom violations carry a structured ``witness`` dict naming the offending
table cells, so a corrupted input can be traced back to a single entry.
"""


class EnrichKitError(Exception):
    pass


class SizeBound(EnrichKitError):
    """An exhaustive search would exceed the configured cap."""


class Overflow(EnrichKitError):
    """A constructed finite set would exceed the cardinality cap."""


class ShapeMismatch(EnrichKitError):
    """Arguments do not share the required domain/codomain shape."""


class InternalError(EnrichKitError):
    """A self-test failed: an enumeration believed complete was not."""


class ValidationError(EnrichKitError):
    """Base class for axiom violations found by a validator."""

    def __init__(self, message: str, witness: dict | None = None):
        super().__init__(message)
        self.witness = dict(witness or {})


class DanglingReference(ValidationError):
    pass


class MissingComposite(ValidationError):
    pass


class IllTypedComposite(ValidationError):
    """A table entry exists but has the wrong domain or codomain."""


class AssociativityViolation(ValidationError):
    pass


class UnitViolation(ValidationError):
    pass


class BifunctorialityViolation(ValidationError):
    pass


class FunctorLawViolation(ValidationError):
    pass


class EnrichedAssociativityViolation(ValidationError):
    pass


class EnrichedUnitViolation(ValidationError):
    pass


class TypeMismatch(ValidationError):
    pass


class ModuleLawViolation(ValidationError):
    pass


class UnitActionViolation(ValidationError):
    pass


class NaturalityViolation(ValidationError):
    pass


class CocycleViolation(ValidationError):
    pass


class CompatibilityViolation(ValidationError):
    pass


class ParseError(EnrichKitError):
    pass


class UnresolvedReference(EnrichKitError):
    pass


class SchemaViolation(EnrichKitError):
    pass
