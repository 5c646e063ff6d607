from decimal import Decimal, ROUND_HALF_UP
import math


def round_half_up(value: float) -> int:
    """Arredonda para o inteiro mais próximo, com .5 sempre para cima."""
    return int(math.floor(value + 0.5))


def round_ratio(numerator: int, denominator: int, decimals: int = 2) -> Decimal:
    """Razão exata arredondada (half-up) em `decimals` casas."""
    quantum = Decimal(1).scaleb(-decimals)
    return (Decimal(numerator) / Decimal(denominator)).quantize(quantum, rounding=ROUND_HALF_UP)
