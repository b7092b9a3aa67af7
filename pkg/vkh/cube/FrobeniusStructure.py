import dataclasses
from typing import Dict, Tuple
from vkh.exceptions import InvalidValueError

# Circle labels: 0 is the unit 1, 1 is x.
ONE = 0
X = 1

Products = Tuple[Tuple[int, int], ...]
Coproducts = Tuple[Tuple[int, Tuple[int, int]], ...]


@dataclasses.dataclass(frozen=True)
class FrobeniusStructure:
    """Rank-two Frobenius algebra on {1, x}; the single-cycle map is always zero."""

    name: str
    product: Dict[Tuple[int, int], Products]
    coproduct: Dict[int, Coproducts]

    def multiply(self, left: int, right: int) -> Products:
        """(coefficient, label) pairs of m(left, right)."""
        return self.product[(left, right)]

    def comultiply(self, label: int) -> Coproducts:
        """(coefficient, (first, second)) pairs of the coproduct."""
        return self.coproduct[label]

    @property
    def preserves_grading(self) -> bool:
        return self.name == 'khovanov'

    @classmethod
    def from_name(cls, name: str) -> 'FrobeniusStructure':
        algebras = {algebra.name: algebra for algebra in (KHOVANOV, LEE)}
        if name not in algebras:
            raise InvalidValueError('Unknown Frobenius algebra "{}".'.format(name))
        return algebras[name]


KHOVANOV = FrobeniusStructure(
    name='khovanov',
    product={
        (ONE, ONE): ((1, ONE),),
        (ONE, X): ((1, X),),
        (X, ONE): ((1, X),),
        (X, X): ()
    },
    coproduct={
        ONE: ((1, (ONE, X)), (1, (X, ONE))),
        X: ((1, (X, X)),)
    }
)

LEE = FrobeniusStructure(
    name='lee',
    product={
        (ONE, ONE): ((1, ONE),),
        (ONE, X): ((1, X),),
        (X, ONE): ((1, X),),
        (X, X): ((1, ONE),)
    },
    coproduct={
        ONE: ((1, (ONE, X)), (1, (X, ONE))),
        X: ((1, (X, X)), (1, (ONE, ONE)))
    }
)
