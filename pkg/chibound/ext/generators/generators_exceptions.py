from chibound.lib import ResponsiveException


class GeneratorsException(ResponsiveException):
    pass


class InvalidGenConfig(GeneratorsException):
    def __init__(self, reason: str):
        self.reason: str = reason
        super().__init__(f"Invalid generator configuration: {reason}")


class GenerationFailure(GeneratorsException):
    def __init__(self, graph6: str, steps: int):
        self.graph6: str = graph6
        self.steps: int = steps
        super().__init__(
            f"Could not repair `{graph6}` into a (P3∪P2, K4)-free graph"
            + f" within {steps} edge deletions"
        )
