from chibound.lib import ResponsiveException


class OracleException(ResponsiveException):
    pass


class InvalidColorBudget(OracleException):
    def __init__(self, k: int):
        self.k: int = k
        super().__init__(f"Color budget must be at least 1 (got {k})")
