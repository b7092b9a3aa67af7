import logging
from fractions import Fraction
from vkh.Diagram import Diagram, crossing_counts
from vkh.exceptions import ConsistencyError, InvalidValueError
from vkh.invariants.LinkingMatrix import linking_matrix
from vkh.invariants.ParityData import parities
from vkh.invariants.MultiCoreDecomposition import multi_core, parity_fn
from vkh.invariants.ParityScheme import ParityScheme


def lambda_tilde_doubled(diagram: Diagram, scheme: ParityScheme = ParityScheme.MULTICORE) -> int:
    """2 * sum over i < j of the modified linking numbers."""
    if scheme is ParityScheme.NONE:
        raise InvalidValueError('Modified linking numbers need a parity scheme other than none.')
    doubled = linking_matrix(diagram).doubled
    pair_parity = parities(diagram).pair_parity
    decomposition = multi_core(diagram) if scheme is not ParityScheme.ALLONE else None
    total = 0
    for i in range(len(doubled)):
        for j in range(i + 1, len(doubled)):
            value = doubled[i][j]
            if decomposition is None:
                parity = 1
            else:
                parity = parity_fn(decomposition, scheme, i, j)
            if (value + pair_parity[i][j]) % 2:
                logging.error('Non-integral exponent for components %s, %s (doubled Lk %s)', i, j, value)
                raise ConsistencyError('Modified linking exponent is not an integer for components {} and {}.'.format(i, j))
            exponent = parity * (value + pair_parity[i][j]) // 2
            total += -value if exponent % 2 else value
    return total


def lambda_tilde(diagram: Diagram, scheme: ParityScheme = ParityScheme.MULTICORE) -> Fraction:
    return Fraction(lambda_tilde_doubled(diagram, scheme), 2)


def l_tilde_doubled(lambda_doubled: int) -> int:
    return lambda_doubled % 4


def l_tilde(value: Fraction) -> Fraction:
    """0, 1/2, 1 or 3/2 according to 2 * value mod 4."""
    doubled = value * 2
    if doubled.denominator != 1:
        raise InvalidValueError('{} is not a half-integer.'.format(value))
    return Fraction(l_tilde_doubled(int(doubled)), 2)


def classical_sign_exponent(diagram: Diagram) -> int:
    """2 * (lambda - s_minus - m / 2)."""
    counts = crossing_counts(diagram)
    return linking_matrix(diagram).lambda_doubled - 2 * counts.s_minus - counts.m


def unoriented_sign_exponent(diagram: Diagram, scheme: ParityScheme = ParityScheme.MULTICORE) -> int:
    """2 * (lambda~ - s_minus - m / 2); the lambda~ term is left out for the none scheme."""
    counts = crossing_counts(diagram)
    exponent = -2 * counts.s_minus - counts.m
    if scheme is not ParityScheme.NONE:
        exponent += lambda_tilde_doubled(diagram, scheme)
        if exponent % 2:
            logging.error('Odd unoriented sign exponent %s', exponent)
            raise ConsistencyError('lambda~ - m/2 is not an integer ({}).'.format(exponent))
    return exponent
