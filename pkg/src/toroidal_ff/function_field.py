"""A curve bundled with its cached invariants."""

from functools import cached_property

from .characters import character_group, pic_characters, quadratic_characters
from .curves import (CurveModel, count_points, enumerate_places, hyperelliptic_curve,
                     places_of_degree, rational_curve)
from .errors import ContractViolation
from .picard import (Cantor, IDENTITY, canonical_class, class_group, degree_one_class,
                     place_class)


class FunctionField:
    """Function field of a curve, with a fixed degree-one place ``base``.

    Characters of degree-d places are evaluated on [x - d * base].  The
    default base is the canonical choice of ``degree_one_class``.
    """

    def __init__(self, curve: CurveModel, base=None):
        self.curve = curve
        if base is None:
            base = degree_one_class(curve)
        if base.degree != 1:
            raise ContractViolation("the base place must have degree one")
        self.base = base
        self._place_logs = {}

    @classmethod
    def rational(cls, p, k=1):
        return cls(rational_curve(p, k))

    @classmethod
    def hyperelliptic(cls, p, k, f, h=()):
        return cls(hyperelliptic_curve(p, k, f, h))

    def __repr__(self):
        return f"FunctionField({self.curve!r})"

    @property
    def q(self):
        return self.curve.q

    @property
    def genus(self):
        return self.curve.genus

    @cached_property
    def table(self):
        return class_group(self.curve)

    @property
    def class_number(self):
        return self.table.order

    @cached_property
    def law(self):
        return None if self.curve.is_rational else Cantor(self.curve)

    def point_count(self, n):
        return count_points(self.curve, n)

    def places(self, d_max):
        return enumerate_places(self.curve, d_max)

    def places_of_degree(self, d):
        return places_of_degree(self.curve, d)

    def place_log(self, place):
        """Discrete log of [x - deg(x) * oo]."""
        key = place
        if key not in self._place_logs:
            if self.curve.is_rational:
                cls = IDENTITY
            else:
                cls = place_class(self.curve, place, self.law)
            self._place_logs[key] = self.table.log(cls)
        return self._place_logs[key]

    @cached_property
    def base_log(self):
        """Discrete log of [base - oo]."""
        return self.place_log(self.base)

    def relative_log(self, place):
        """Discrete log of [x - deg(x) * base]."""
        t = self.table
        return t.add_logs(self.place_log(place), t.scale_log(-place.degree, self.base_log))

    @cached_property
    def canonical(self):
        """(class of K - (2g-2) base, 2g - 2)."""
        return canonical_class(self.curve, self.base)

    @cached_property
    def canonical_log(self):
        return self.table.log(self.canonical[0])

    @cached_property
    def characters(self):
        return character_group(self.table)

    @cached_property
    def pic_characters(self):
        return pic_characters(self.table)

    @cached_property
    def quadratic_characters(self):
        return quadratic_characters(self.table)

    @property
    def default_place_degree(self):
        return max(2 * self.genus - 2, 4)

    def trivial_character(self, sign_twist=0):
        return self.characters[self.table.order * sign_twist]
