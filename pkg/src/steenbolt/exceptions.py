#!/usr/bin/env python3
# coding=utf-8

"""
Exceptions specific to steenbolt.
"""

from typing import Any

from vt.utils.errors.error_specs.exceptions import VTException, VTExitingException


class SteenboltException(VTException):
    """
    ``VTException`` specific to steenbolt.

    Examples:

      * raise exception:

        >>> raise SteenboltException()
        Traceback (most recent call last):
        steenbolt.exceptions.SteenboltException

      * raise exception with a message:

        >>> raise SteenboltException('unexpected.')
        Traceback (most recent call last):
        steenbolt.exceptions.SteenboltException: unexpected.

      * raise exception from another exception:

        >>> raise SteenboltException() from ValueError
        Traceback (most recent call last):
        steenbolt.exceptions.SteenboltException: ValueError

    ... rest examples mimic ``VTException`` examples.
    """

    pass


class SteenboltExitingException(SteenboltException, VTExitingException):
    """
    ``SteenboltException`` that carries an ``exit_code``.
    """

    pass


class SurjectionException(SteenboltExitingException):
    """
    Raised for invalid surjection strings, out-of-range composition slots and arity mismatches.

    >>> raise SurjectionException('bad slot', exit_code=2) from ValueError('bad slot')
    Traceback (most recent call last):
    steenbolt.exceptions.SurjectionException: ValueError: bad slot
    """

    pass


class ChainParseException(SurjectionException):
    """
    Raised when chain text does not match the chain grammar.

    The 0-based character position where parsing stopped travels as the ``position`` keyword:

    >>> ChainParseException("unexpected character", position=3, exit_code=2).position
    3
    """

    def __init__(self, *args: object, position: int = 0, **kwargs: Any):
        super().__init__(*args, **kwargs)
        self._position = position

    @property
    def position(self) -> int:
        return self._position


class ComplexException(SteenboltExitingException):
    """
    Raised for malformed complex files and for cochains that do not fit the complex they are used with.
    """

    pass


class TruncationException(SteenboltExitingException):
    """
    Raised when a bar construction computation needs words beyond its truncation.
    """

    pass
