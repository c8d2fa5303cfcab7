from chibound.ext.patterns import Embedding
from chibound.lib import ResponsiveException


class BoundsException(ResponsiveException):
    pass


class BoundsClassViolation(BoundsException):
    def __init__(self, witness: Embedding):
        self.witness: Embedding = witness
        images = ", ".join(f"{k}={v}" for k, v in witness.as_mapping().items())
        super().__init__(
            f"Graph is not (4K1, co-(P3∪P2))-free: it contains `{witness.pattern}` at {images}"
        )
