from chibound.core.cli import run

run()
