from __future__ import annotations

import typing
from enum import Enum
from fractions import Fraction
from typing import Any, Literal, Type, TypeVar

T = TypeVar("T")
E = TypeVar("E", bound=Enum)


class JsonRecord:
    """Base class for values that are written to and read back from JSON reports.

    Subclasses implement :meth:`to_dict` and :meth:`from_dict`; the static helpers
    validate each field of a decoded document before it becomes a typed value.
    """

    def to_dict(self) -> dict[str, Any]:
        raise NotImplementedError(
            f"Method to_dict not implemented in {self.__class__.__name__}."
        )

    @classmethod
    def from_dict(cls, data: dict[str, Any]):
        raise NotImplementedError(
            f"Method from_dict not implemented in {cls.__name__}."
        )

    @staticmethod
    def _make_prop(value: T, t: Type[T]) -> T:
        if value is None:
            return value
        if typing.get_origin(t) is Literal and value in typing.get_args(t):
            return value
        # bool is an int subclass but never a valid count
        if isinstance(value, bool) and t is not bool:
            raise TypeError(f"Expected {t}, received {value.__class__}.")
        if isinstance(value, t):
            return value
        else:
            raise TypeError(f"Expected {t}, received {value.__class__}.")

    @staticmethod
    def _make_list_of_type_prop(value: list[T], t: Type[T]) -> list[T]:
        if not isinstance(value, list):
            raise TypeError(f"Expected list of {t}, received {value.__class__}.")
        if not all(isinstance(x, t) and not isinstance(x, bool) for x in value):
            raise TypeError(
                (
                    f"Expected list of {t}, received list of "
                    f"{next(iter(value), None).__class__}."
                )
            )
        else:
            return value

    @staticmethod
    def _make_str_prop(value: str | None) -> str | None:
        return JsonRecord._make_prop(value, str)

    @staticmethod
    def _make_int_prop(value: int | None) -> int | None:
        return JsonRecord._make_prop(value, int)

    @staticmethod
    def _make_bool_prop(value: bool | None) -> bool | None:
        return JsonRecord._make_prop(value, bool)

    @staticmethod
    def _make_list_of_ints_prop(value: list[int]) -> list[int]:
        return JsonRecord._make_list_of_type_prop(value, int)

    @staticmethod
    def _make_list_of_strs_prop(value: list[str]) -> list[str]:
        return JsonRecord._make_list_of_type_prop(value, str)

    @staticmethod
    def _make_enum_prop(value: str, cls: Type[E]) -> E:
        if not isinstance(value, str):
            raise TypeError(f"Expected {cls.__name__} value, received {value!r}.")
        return cls(value)

    @staticmethod
    def _make_rational_prop(value: dict[str, Any] | None) -> Fraction | None:
        if value is None:
            return None
        if not isinstance(value, dict) or set(value) != {"num", "den"}:
            raise TypeError(f"Expected {{'num', 'den'}} object, received {value!r}.")
        num = JsonRecord._make_int_prop(value["num"])
        den = JsonRecord._make_int_prop(value["den"])
        if num is None or den is None or den <= 0:
            raise ValueError(f"Invalid rational {value!r}.")
        return Fraction(num, den)
