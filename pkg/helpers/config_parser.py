"""
Reader for `key = value` configuration files with `#` comments, built on python-dotenv.
"""
from __future__ import annotations

import io
from typing import Dict, Iterable

from dotenv import dotenv_values
from dotenv.parser import parse_stream

from helpers.exceptions.config_exceptions import InvalidConfigKeyException, InvalidConfigValueException

SEPARATOR = "="


def _check(text: str, origin: str) -> None:
    # dotenv skips malformed statements and keeps bare keys as None; both are errors here.
    for binding in parse_stream(io.StringIO(text)):
        statement = binding.original.string.strip()
        where = f"{origin} {binding.original.line}" if origin == "la línia" else origin
        if binding.error:
            key = statement.split(SEPARATOR, 1)[0].strip()
            if not key:
                raise InvalidConfigKeyException(f"Clau buida a {where}", key=key)
            raise InvalidConfigValueException(f"No s'ha pogut interpretar {where}: '{statement}'", key=key.split()[0])
        if binding.key is not None and binding.value is None:
            raise InvalidConfigValueException(f"Falta '=' a {where}: '{statement}'", key=binding.key)


def parse_text(text: str, origin: str = "la línia") -> Dict[str, str]:
    """
    Parse configuration text; later occurrences of a key replace earlier ones.
    Args:
        text (str): Raw configuration content.
        origin (str): Where the text came from, for diagnostics.
    Returns:
        Dict[str, str]: Raw string values by key, with quotes removed.
    Raises:
        InvalidConfigKeyException: For a statement with an empty key.
        InvalidConfigValueException: For a statement without '=' or one that cannot be parsed.
    """
    _check(text, origin)
    return dict(dotenv_values(stream=io.StringIO(text), interpolate=False))


def parse_lines(lines: Iterable[str]) -> Dict[str, str]:
    return parse_text("\n".join(line.rstrip("\r\n") for line in lines))


def read_config_file(path: str) -> Dict[str, str]:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except FileNotFoundError as exc:
        raise InvalidConfigValueException(f"No s'ha trobat el fitxer de configuració '{path}'", key="config") from exc
    except OSError as exc:
        raise InvalidConfigValueException(f"No s'ha pogut llegir '{path}': {exc}", key="config") from exc
    return parse_text(text)


def parse_overrides(items: Iterable[str]) -> Dict[str, str]:
    """`key=value` pairs given on the command line."""
    values: Dict[str, str] = {}
    for item in items:
        values.update(parse_text(item, "--set"))
    return values
