from chibound.ext.patterns import Embedding
from chibound.lib import ResponsiveException
from chibound.lib.graph import Witness


class ColorerException(ResponsiveException):
    pass


class ClassViolation(ColorerException):
    def __init__(self, witness: Embedding):
        self.witness: Embedding = witness
        images = ", ".join(f"{k}={v}" for k, v in witness.as_mapping().items())
        super().__init__(
            f"Graph is not (P3∪P2, K4)-free: it contains `{witness.pattern}` at {images}"
        )


class ClaimViolation(ColorerException):
    exit_code = 3

    def __init__(self, claim_id: str, witness: Witness):
        self.claim_id: str = claim_id
        self.witness: Witness = witness
        super().__init__(
            f"Claim `{claim_id}` failed: {witness.kind.value} at {list(witness.vertices)}"
        )


class HypothesisViolation(ClaimViolation):
    def __init__(self, condition: str, witness: Witness):
        self.condition: str = condition
        super().__init__(f"three-part.{condition}", witness)
