from typing import Dict, Optional, TypedDict


class FieldData(TypedDict):
    discriminant: int
    fundamental_unit: str


# Real quadratic fields Q(sqrt(d)) of narrow class number one, small radicands.
# The toolkit trusts this declaration; it only verifies the unit norm itself.
# Units are written (a+b√d)/2 as "a b".
NARROW_CLASS_NUMBER_ONE: Dict[int, FieldData] = {
    2: {"discriminant": 8, "fundamental_unit": "2 2"},
    5: {"discriminant": 5, "fundamental_unit": "1 1"},
    13: {"discriminant": 13, "fundamental_unit": "3 1"},
    17: {"discriminant": 17, "fundamental_unit": "8 2"},
    29: {"discriminant": 29, "fundamental_unit": "5 1"},
    37: {"discriminant": 37, "fundamental_unit": "12 2"},
    41: {"discriminant": 41, "fundamental_unit": "64 10"},
    53: {"discriminant": 53, "fundamental_unit": "7 1"},
    61: {"discriminant": 61, "fundamental_unit": "39 5"},
    73: {"discriminant": 73, "fundamental_unit": "2136 250"},
    89: {"discriminant": 89, "fundamental_unit": "1000 106"},
    97: {"discriminant": 97, "fundamental_unit": "11208 1138"},
}


def declared_narrow_class_number_one(d: int) -> bool:
    """Whether Q(sqrt(d)) is in the declared table."""
    return d in NARROW_CLASS_NUMBER_ONE


def get_field_data(d: int) -> Optional[FieldData]:
    """Declared data for Q(sqrt(d)), or None when the field is not tabulated."""
    return NARROW_CLASS_NUMBER_ONE.get(d)
