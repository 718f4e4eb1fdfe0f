#!/usr/bin/env python3
# coding=utf-8

"""
Argument validators for generator construction and for the relation-check grids.
"""

from __future__ import annotations

import logging
from abc import abstractmethod
from typing import Protocol, override

from vt.utils.errors.error_specs import ERR_INVALID_USAGE
from vt.utils.errors.error_specs.utils import require_type

from steenbolt._internal_init import errmsg_creator
from steenbolt.constants import (
    MAX_BAR_LENGTH,
    MAX_CHECK_ARITY,
    MAX_CHECK_K,
    MAX_GENERATOR_LENGTH,
)
from steenbolt.exceptions import SteenboltExitingException

logger = logging.getLogger(__name__)


class GeneratorArgsValidator(Protocol):
    """
    The argument validator for ``E^k_{p,q}`` construction.
    """

    @abstractmethod
    def validate(self, k: int, p: int, q: int, *, unsafe_large: bool = True) -> None:
        """
        Validate the parameters of ``E^k_{p,q}``.

        * ``TypeError`` leads to ``ERR_DATA_FORMAT_ERR``.
        * ``ValueError`` leads to ``ERR_INVALID_USAGE``.

        :param k: superscript, ``k >= 0``.
        :param p: number of ``a``-inputs, ``p >= 1``.
        :param q: number of ``b``-inputs, ``q >= 1``.
        :param unsafe_large: skip the string length guard.
        :raises SteenboltExitingException: When validation fails.
        """
        ...


class UtilGeneratorArgsValidator(GeneratorArgsValidator):
    """
    Independent utility function sort of interface to perform generator arguments validation.
    """

    @override
    def validate(self, k: int, p: int, q: int, *, unsafe_large: bool = True) -> None:
        """
        Examples::

            >>> UtilGeneratorArgsValidator().validate(0, 1, 2)
            >>> UtilGeneratorArgsValidator().validate(40, 20, 20)
            >>> UtilGeneratorArgsValidator().validate(0, 2, 1, unsafe_large=False)

        Invalid Examples::

            >>> UtilGeneratorArgsValidator().validate(-1, 1, 1)
            Traceback (most recent call last):
            steenbolt.exceptions.SteenboltExitingException: ValueError: k must be at least 0, got -1.

            >>> UtilGeneratorArgsValidator().validate(0, 0, 1)
            Traceback (most recent call last):
            steenbolt.exceptions.SteenboltExitingException: ValueError: p must be at least 1, got 0.

            >>> UtilGeneratorArgsValidator().validate(40, 20, 20, unsafe_large=False)
            Traceback (most recent call last):
            steenbolt.exceptions.SteenboltExitingException: ValueError: E^40_{20,20} has strings of length 119, above the guard 64.
        """
        self.validate_non_negative(k, "k")
        self.validate_positive(p, "p")
        self.validate_positive(q, "q")
        length = 2 * (p + q) + k - 1
        if length > MAX_GENERATOR_LENGTH:
            if not unsafe_large:
                errmsg = f"E^{k}_{{{p},{q}}} has strings of length {length}, above the guard {MAX_GENERATOR_LENGTH}."
                raise SteenboltExitingException(
                    errmsg, exit_code=ERR_INVALID_USAGE
                ) from ValueError(errmsg)

    def validate_non_negative(self, val: int, name: str) -> None:
        require_type(val, name, int, SteenboltExitingException)
        if val < 0:
            errmsg = f"{name} must be at least 0, got {val}."
            raise SteenboltExitingException(
                errmsg, exit_code=ERR_INVALID_USAGE
            ) from ValueError(errmsg)

    def validate_positive(self, val: int, name: str) -> None:
        require_type(val, name, int, SteenboltExitingException)
        if val < 1:
            errmsg = f"{name} must be at least 1, got {val}."
            raise SteenboltExitingException(
                errmsg, exit_code=ERR_INVALID_USAGE
            ) from ValueError(errmsg)


class CheckArgsValidator(Protocol):
    """
    The argument validator for relation-check instances and grids.
    """

    @abstractmethod
    def validate_instance(
        self, k: int, m: int, n: int, *, unsafe_large: bool = False
    ) -> None:
        """
        Validate one ``(k, m, n)`` instance against the check guards.

        :raises SteenboltExitingException: When validation fails.
        """
        ...

    @abstractmethod
    def validate_selection(
        self,
        k: int | None,
        m: int | None,
        n: int | None,
        max_k: int | None,
        max_arity: int | None,
    ) -> None:
        """
        Validate that a single instance and a grid are not requested together.

        :raises SteenboltExitingException: When validation fails.
        """
        ...


class UtilCheckArgsValidator(CheckArgsValidator):
    """
    Independent utility function sort of interface to perform check arguments validation.
    """

    @override
    def validate_instance(
        self, k: int, m: int, n: int, *, unsafe_large: bool = False
    ) -> None:
        """
        Examples::

            >>> UtilCheckArgsValidator().validate_instance(1, 2, 2)
            >>> UtilCheckArgsValidator().validate_instance(1, 9, 9, unsafe_large=True)

        Invalid Examples::

            >>> UtilCheckArgsValidator().validate_instance(1, 9, 9)
            Traceback (most recent call last):
            steenbolt.exceptions.SteenboltExitingException: ValueError: m+n=18 is above the guard 8, pass --unsafe-large to lift it.

            >>> UtilCheckArgsValidator().validate_instance(6, 1, 1)
            Traceback (most recent call last):
            steenbolt.exceptions.SteenboltExitingException: ValueError: k=6 is above the guard 5, pass --unsafe-large to lift it.
        """
        guard = UtilGeneratorArgsValidator()
        guard.validate_non_negative(k, "k")
        guard.validate_positive(m, "m")
        guard.validate_positive(n, "n")
        if unsafe_large:
            if k > MAX_CHECK_K or m + n > MAX_CHECK_ARITY:
                logger.warning(
                    "checking k=%d m=%d n=%d beyond the default guards", k, m, n
                )
            return
        if k > MAX_CHECK_K:
            errmsg = f"k={k} is above the guard {MAX_CHECK_K}, pass --unsafe-large to lift it."
            raise SteenboltExitingException(
                errmsg, exit_code=ERR_INVALID_USAGE
            ) from ValueError(errmsg)
        if m + n > MAX_CHECK_ARITY:
            errmsg = f"m+n={m + n} is above the guard {MAX_CHECK_ARITY}, pass --unsafe-large to lift it."
            raise SteenboltExitingException(
                errmsg, exit_code=ERR_INVALID_USAGE
            ) from ValueError(errmsg)

    @override
    def validate_selection(
        self,
        k: int | None,
        m: int | None,
        n: int | None,
        max_k: int | None,
        max_arity: int | None,
    ) -> None:
        """
        Examples::

            >>> UtilCheckArgsValidator().validate_selection(1, 2, 2, None, None)
            >>> UtilCheckArgsValidator().validate_selection(None, None, None, 2, 3)

        Invalid Examples::

            >>> UtilCheckArgsValidator().validate_selection(1, None, None, 2, None)
            Traceback (most recent call last):
            steenbolt.exceptions.SteenboltExitingException: ValueError: k and max_k are not allowed together

            >>> UtilCheckArgsValidator().validate_selection(None, 2, None, None, 3)
            Traceback (most recent call last):
            steenbolt.exceptions.SteenboltExitingException: ValueError: m and max_arity are not allowed together
        """
        for name, single, grid_name, grid in (
            ("k", k, "max_k", max_k),
            ("m", m, "max_arity", max_arity),
            ("n", n, "max_arity", max_arity),
        ):
            if single is not None and grid is not None:
                errmsg = errmsg_creator.not_allowed_together(name, grid_name)
                raise SteenboltExitingException(
                    errmsg, exit_code=ERR_INVALID_USAGE
                ) from ValueError(errmsg)


def validate_bar_length(length: int, *, unsafe_large: bool = False) -> None:
    """
    Guard the word length of bar truncations.

    >>> validate_bar_length(3)
    >>> validate_bar_length(5)
    Traceback (most recent call last):
    steenbolt.exceptions.SteenboltExitingException: ValueError: max-len 5 is above the guard 4, pass --unsafe-large to lift it.
    """
    UtilGeneratorArgsValidator().validate_non_negative(length, "max_len")
    if length > MAX_BAR_LENGTH:
        if unsafe_large:
            logger.warning("bar truncation of word length %d beyond the default guard", length)
            return
        errmsg = f"max-len {length} is above the guard {MAX_BAR_LENGTH}, pass --unsafe-large to lift it."
        raise SteenboltExitingException(
            errmsg, exit_code=ERR_INVALID_USAGE
        ) from ValueError(errmsg)
