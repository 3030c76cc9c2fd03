"""Formatting-rule engine with Checkstyle-compatible configuration and reports.

The ruleset is the familiar XML subset (``<module name="Checker">`` with an
optional ``TreeWalker`` wrapper); reports use the classic
``[ERROR] file:line[:col]: message [Rule]`` line format. Rule semantics are
token-level approximations of the upstream checks; see rules.py.
"""

from __future__ import annotations

import json
import re
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field

from . import rules
from .lexing import LexError, delimiters_balanced, lex
from .rules import ConfigError


class BrokenFileError(Exception):
    """The file cannot be lexed or has unbalanced delimiters."""

    def __init__(self, reason: str, line: int = 1, column: int = 1):
        super().__init__(reason)
        self.reason = reason
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Violation:
    file: str
    line: int
    column: int | None
    rule: str
    message: str

    def sort_key(self):
        return (self.line, self.column or 0, self.rule)


@dataclass(frozen=True)
class RuleConfig:
    name: str
    properties: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Ruleset:
    rules: tuple[RuleConfig, ...]
    warnings: tuple[str, ...] = ()

    def __iter__(self):
        return iter(self.rules)

    def __len__(self):
        return len(self.rules)

    def rule_names(self) -> list[str]:
        return [r.name for r in self.rules]

    def has(self, name: str) -> bool:
        return any(r.name == name for r in self.rules)


SUPPORTED_RULES = rules.SUPPORTED_RULES

# Common upstream module names that are recognized but outside the
# formatting engine; they are skipped with a warning instead of rejected.
IGNORED_MODULES = frozenset([
    "TreeWalker", "SuppressionFilter", "SuppressWarningsFilter",
    "SuppressWarningsHolder", "SeverityMatchFilter", "BeforeExecutionExclusionFileFilter",
    # formatting rules deliberately out of scope
    "CommentsIndentation", "EmptyLineSeparator", "NoLineWrap", "Regexp",
    "RegexpMultiline", "RegexpSinglelineJava", "TrailingComment",
    "AnnotationLocation", "AnnotationOnSameLine", "EmptyForInitializerPad",
    "SingleSpaceSeparator", "TypecastParenPad",
    # widespread non-formatting checks
    "UnusedImports", "RedundantImport", "AvoidStarImport", "IllegalImport",
    "ImportOrder", "CustomImportOrder", "PackageName", "TypeName",
    "MemberName", "MethodName", "ParameterName", "LocalVariableName",
    "LocalFinalVariableName", "StaticVariableName", "ConstantName",
    "ClassTypeParameterName", "MethodTypeParameterName", "MethodLength",
    "ParameterNumber", "FileLength", "JavadocMethod", "JavadocType",
    "JavadocVariable", "JavadocStyle", "JavadocPackage", "MissingJavadocMethod",
    "EmptyBlock", "EmptyCatchBlock", "NeedBraces", "AvoidNestedBlocks",
    "EmptyStatement", "EqualsHashCode", "HiddenField", "IllegalInstantiation",
    "InnerAssignment", "MagicNumber", "MissingSwitchDefault",
    "SimplifyBooleanExpression", "SimplifyBooleanReturn", "FinalClass",
    "HideUtilityClassConstructor", "InterfaceIsType", "VisibilityModifier",
    "ArrayTypeStyle", "FinalParameters", "TodoComment", "UpperEll",
    "ModifierOrder", "RedundantModifier", "Translation", "UniqueProperties",
    "OuterTypeFilename", "LineLengthExtended", "DescendantToken",
])

_VAR_PATTERN = re.compile(r"\$\{[^}]*\}")


def parse_ruleset(xml_text: str) -> Ruleset:
    """Parse the Checkstyle XML subset into a validated Ruleset."""
    try:
        root = ET.fromstring(xml_text)
    except ET.ParseError as exc:
        raise ConfigError(f"malformed ruleset XML: {exc}") from exc
    if root.tag != "module" or root.get("name") != "Checker":
        raise ConfigError('ruleset root must be <module name="Checker">')

    configs: list[RuleConfig] = []
    warnings: list[str] = []

    def walk(element: ET.Element):
        for child in element:
            if child.tag == "property":
                value = child.get("value", "")
                if _VAR_PATTERN.search(value):
                    raise ConfigError(f"unresolved variable in property value: {value!r}")
                continue
            if child.tag != "module":
                continue
            name = child.get("name", "")
            if name == "TreeWalker":
                walk(child)
            elif name in SUPPORTED_RULES:
                configs.append(_parse_rule(name, child))
            elif name in IGNORED_MODULES:
                warnings.append(f"ignoring non-formatting module {name}")
                continue
            else:
                raise ConfigError(f"unknown module name {name!r}")

    walk(root)
    return Ruleset(tuple(configs), tuple(warnings))


def _parse_rule(name: str, element: ET.Element) -> RuleConfig:
    props: dict = {}
    for child in element:
        if child.tag != "property":
            continue
        pname = child.get("name", "")
        value = child.get("value", "")
        if _VAR_PATTERN.search(value):
            raise ConfigError(f"unresolved variable in {name}.{pname}: {value!r}")
        props[pname] = value
    return RuleConfig(name, rules.validate_properties(name, props))


def check(source: str, ruleset: Ruleset, path: str = "<memory>") -> list[Violation]:
    """Run every configured rule; deterministic (line, column, rule) order.

    Raises BrokenFileError when the source cannot be lexed or its
    delimiters do not balance.
    """
    try:
        stream = lex(source, path)
    except LexError as exc:
        raise BrokenFileError(exc.reason, exc.line, exc.column) from exc
    if not delimiters_balanced(stream):
        raise BrokenFileError("unbalanced braces, brackets, or parentheses")

    ctx = rules.CheckContext(source, stream, path)
    violations: list[Violation] = []
    for config in ruleset:
        checker = rules.RULE_CHECKERS[config.name]
        for line, column, message in checker(ctx, config.properties):
            violations.append(Violation(path, line, column, config.name, message))
    violations.sort(key=Violation.sort_key)
    return violations


def format_report(v: Violation) -> str:
    if v.column is not None:
        return f"[ERROR] {v.file}:{v.line}:{v.column}: {v.message} [{v.rule}]"
    return f"[ERROR] {v.file}:{v.line}: {v.message} [{v.rule}]"


_REPORT_PATTERN = re.compile(
    r"^\[ERROR\] (?P<file>.*?):(?P<line>\d+)(?::(?P<col>\d+))?: (?P<msg>.*) \[(?P<rule>\w+)\]$")


def parse_report(line: str) -> Violation:
    """Inverse of format_report (used for report round-trip checks)."""
    m = _REPORT_PATTERN.match(line)
    if not m:
        raise ValueError(f"not a report line: {line!r}")
    col = int(m.group("col")) if m.group("col") else None
    return Violation(m.group("file"), int(m.group("line")), col,
                     m.group("rule"), m.group("msg"))


def violations_to_json(violations: list[Violation]) -> str:
    rows = []
    for v in violations:
        row = {"file": v.file, "line": v.line, "rule": v.rule, "message": v.message}
        if v.column is not None:
            row["column"] = v.column
        rows.append(row)
    return json.dumps(rows, indent=2, sort_keys=True)
