from unittest import TestCase

import attrs

from primegb.errors import NegativeExponent
from primegb.validator import (
    _exponents_validator,
    _nonzero_validator,
    _positive_validator,
)


class TestValidators(TestCase):
    def test_positive_validator(self):
        @attrs.define()
        class Test:
            a: int = attrs.field(validator=_positive_validator)

        self.assertEqual(Test(a=3).a, 3)
        for value in (0, -1, True, 1.0):
            with self.assertRaises(ValueError):
                Test(a=value)  # type: ignore

    def test_nonzero_validator(self):
        @attrs.define()
        class Test:
            a: int = attrs.field(validator=_nonzero_validator)

        with self.assertRaises(ValueError):
            Test(a=0)

    def test_exponents_validator(self):
        @attrs.define()
        class Test:
            a: tuple = attrs.field(validator=_exponents_validator)

        Test(a=(0, 2))
        with self.assertRaises(NegativeExponent):
            Test(a=(1, -1))
        with self.assertRaises(ValueError):
            Test(a=(-2,))
        with self.assertRaises(TypeError):
            Test(a=(1.5,))
