"""Moduli, narrow ray class groups and their characters."""

from ray_class.characters import (
    RayCharacter,
    check_weight_compatibility,
    enumerate_characters,
    find_character,
    is_totally_odd,
)
from ray_class.group import Modulus, RayClassGroup, build_ray_class_group

__all__ = [
    "Modulus",
    "RayClassGroup",
    "build_ray_class_group",
    "RayCharacter",
    "check_weight_compatibility",
    "enumerate_characters",
    "find_character",
    "is_totally_odd",
]
