# This file is a part of Gerty.
#
# Copyright (C) 2021 The Gerty developers
#
# Gerty is free software; you can redistribute it and/or modify it
# under the terms of the GNU Lesser General Public License as published by
# the Free Software Foundation, either version 3 of the License, or (at
# your option) any later version.
#
# Gerty is distributed in the hope that it will be useful, but WITHOUT
# ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or
# FITNESS FOR A PARTICULAR PURPOSE. See the GNU Lesser General Public
# License for more details.
#
# You should have received a copy of the GNU Lesser General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""
Parser for gerty source files.

A file is a sequence of items, each either a signature 'name : type' or a definition 'name = term'. An item starts
on a line whose first column holds its name; lines that do not (continuations, comments) belong to the item above.
Every item is handed to the LALR parser on its own, so one malformed item cannot derail the ones that follow it.
"""
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedInput, UnexpectedToken, VisitError

from gerty.conf import settings
from gerty.core.exceptions import ParseError
from gerty.grades.expressions import ZERO, Add, Lit, Mul, fresh_metavar, numeral
from gerty.grades.semirings import INFINITY
from gerty.syntax.terms import (
    ANONYMOUS,
    App,
    BoxIntro,
    BoxTy,
    Lam,
    LetBox,
    LetPair,
    Pair,
    Pi,
    SourceSpan,
    Tensor,
    Term,
    Var,
    universe,
)

logger = settings.logger

KEYWORDS = frozenset(("Type", "let", "in", "case", "of", "Lo", "Hi", "Inf"))

ITEM_START = re.compile(r"^([A-Za-z][A-Za-z0-9_']*)\s*(:|=)")
PRAGMA = re.compile(r"^%semiring\s+(\S+)\s*$")


@dataclass
class Declaration:
    name: str
    signature: Term
    body: Term
    span: Optional[SourceSpan] = None


@dataclass
class SourceFile:
    """The declarations of one file, in order, plus the semiring its '%semiring' pragma selects (if any)."""

    filename: str
    declarations: List[Declaration] = field(default_factory=list)
    semiring: Optional[str] = None

    def __iter__(self):
        return iter(self.declarations)

    def __len__(self):
        return len(self.declarations)

    def __getitem__(self, item):
        if isinstance(item, str):
            for decl in self.declarations:
                if decl.name == item:
                    return decl
            raise KeyError(item)
        return self.declarations[item]


@lru_cache(maxsize=None)
def get_parser():
    return Lark.open_from_package(
        "gerty.syntax",
        "grammar.lark",
        ("",),
        parser="lalr",
        start=["item", "term"],
        propagate_positions=True,
        maybe_placeholders=True,
    )


@lru_cache(maxsize=None)
def _token_names():
    names = {"$END": "end of input"}
    for terminal in get_parser().terminals:
        if terminal.pattern.type == "str":
            names[terminal.name] = f"'{terminal.pattern.value}'"
        else:
            names[terminal.name] = terminal.name
    return names


def _expected(tokens):
    names = _token_names()
    return {names.get(token, token) for token in tokens}


@v_args(meta=True)
class ToTerms(Transformer):
    """Build terms from parse trees. Omitted and '_' grades become fresh metavariables."""

    def __init__(self, filename, line_offset=0):
        super().__init__()
        self.filename = filename
        self.line_offset = line_offset

    def _span(self, meta):
        if getattr(meta, "empty", True):
            return None
        return SourceSpan(
            self.filename,
            meta.line + self.line_offset,
            meta.column,
            meta.end_line + self.line_offset,
            meta.end_column,
        )

    def signature(self, meta, children):
        name, term = children
        return "signature", str(name), term, self._span(meta)

    def definition(self, meta, children):
        name, term = children
        return "definition", str(name), term, self._span(meta)

    def lam(self, meta, children):
        *names, body = children
        span = self._span(meta)
        for name in reversed(names):
            body = Lam(str(name), body, span=span)
        return body

    def let_box(self, meta, children):
        name, scrutinee, body = children
        return LetBox(str(name), scrutinee, body, span=self._span(meta))

    def case_pair(self, meta, children):
        scrutinee, x, y, body = children
        return LetPair(str(x), str(y), scrutinee, body, span=self._span(meta))

    def case_box(self, meta, children):
        scrutinee, name, body = children
        return LetBox(str(name), scrutinee, body, span=self._span(meta))

    def pi(self, meta, children):
        *binders, codomain = children
        span = self._span(meta)
        for kind, name, grades, domain, binder_span in reversed(binders):
            if kind == "pi":
                s, r = grades
            elif kind == "graded":
                s, r = grades[0], fresh_metavar()
            else:
                s, r = fresh_metavar(), fresh_metavar()
            codomain = Pi(name, s, r, domain, codomain, span=span)
        return codomain

    def tensor(self, meta, children):
        (kind, name, grades, first, binder_span), second = children
        if kind == "pi":
            raise ParseError(
                self.filename, binder_span.line, binder_span.column, {"a single grade"},
            )
        r = grades[0] if kind == "graded" else fresh_metavar()
        return Tensor(name, r, first, second, span=self._span(meta))

    def arrow(self, meta, children):
        domain, codomain = children
        return Pi(ANONYMOUS, fresh_metavar(), fresh_metavar(), domain, codomain, span=self._span(meta))

    def pi_binder(self, meta, children):
        name, s, r, domain = children
        return "pi", str(name), (s, r), domain, self._span(meta)

    def graded_binder(self, meta, children):
        name, g, domain = children
        return "graded", str(name), (g,), domain, self._span(meta)

    def plain_binder(self, meta, children):
        name, domain = children
        return "plain", str(name), (), domain, self._span(meta)

    def application(self, meta, children):
        fn, arg = children
        return App(fn, arg, span=self._span(meta))

    def var(self, meta, children):
        (name,) = children
        return Var(str(name), span=self._span(meta))

    def universe(self, meta, children):
        (level,) = children
        return universe(0 if level is None else int(level), span=self._span(meta))

    def pair(self, meta, children):
        first, second = children
        return Pair(first, second, span=self._span(meta))

    def product(self, meta, children):
        first, second = children
        return Tensor(ANONYMOUS, ZERO, first, second, span=self._span(meta))

    def box_type(self, meta, children):
        s, body = children
        return BoxTy(s, body, span=self._span(meta))

    def box_intro(self, meta, children):
        (body,) = children
        return BoxIntro(body, span=self._span(meta))

    def gadd(self, meta, children):
        return Add(*children)

    def gmul(self, meta, children):
        return Mul(*children)

    def gnum(self, meta, children):
        return numeral(int(children[0][1:]))

    def gint(self, meta, children):
        return numeral(int(children[0]))

    def glo(self, meta, children):
        return Lit("Lo")

    def ghi(self, meta, children):
        return Lit("Hi")

    def ginf(self, meta, children):
        return Lit(INFINITY)

    def ghole(self, meta, children):
        return fresh_metavar()


def _end_of(text, line_offset):
    lines = text.rstrip("\n").split("\n")
    return line_offset + len(lines), len(lines[-1]) + 1


def _parse(text, start, filename, line_offset=0):
    try:
        tree = get_parser().parse(text, start=start)
    except UnexpectedToken as e:
        if e.token.type == "$END":
            line, column = _end_of(text, line_offset)
        else:
            line, column = e.line + line_offset, e.column
        raise ParseError(filename, line, column, _expected(e.expected)) from None
    except UnexpectedCharacters as e:
        raise ParseError(filename, e.line + line_offset, e.column, _expected(e.allowed or ())) from None
    except UnexpectedInput as e:
        line, column = _end_of(text, line_offset)
        raise ParseError(filename, line, column, _expected(getattr(e, "expected", ()))) from None

    try:
        return ToTerms(filename, line_offset).transform(tree)
    except VisitError as e:
        raise e.orig_exc from None


def parse_term(text, filename="<term>"):
    """Parse a single term."""
    return _parse(text, "term", filename)


def split_items(text):
    """
    Split source text into items.

    :return: (pragmas, items) where pragmas are (line, semiring name) pairs and items are (first line, text) pairs.
    """
    pragmas, items = [], []
    current, start = None, None
    for number, line in enumerate(text.split("\n"), start=1):
        pragma = PRAGMA.match(line)
        if pragma:
            pragmas.append((number, pragma.group(1)))
            line = ""
        match = ITEM_START.match(line)
        if match and match.group(1) not in KEYWORDS:
            if current is not None:
                items.append((start, "\n".join(current)))
            current, start = [line], number
        elif current is not None:
            current.append(line)
        elif line.strip() and not line.strip().startswith("--"):
            raise ParseError("", number, 1, {"IDENT"})
    if current is not None:
        items.append((start, "\n".join(current)))
    return pragmas, items


def parse_file(text, filename="<input>"):
    """
    Parse a source file.

    :return: A SourceFile holding one Declaration per name, in the order the names first appear.
    :raises ParseError: for malformed items and for names lacking a signature or a definition.
    """
    try:
        pragmas, items = split_items(text)
    except ParseError as e:
        raise ParseError(filename, e.line, e.column, e.expected) from None

    source = SourceFile(filename)
    if pragmas:
        source.semiring = pragmas[-1][1]

    signatures, definitions, order, lines = {}, {}, [], {}
    for first_line, item_text in items:
        kind, name, term, span = _parse(item_text, "item", filename, first_line - 1)
        table = signatures if kind == "signature" else definitions
        if name in table:
            raise ParseError(filename, first_line, 1, {"a fresh name"})
        table[name] = (term, span)
        if name not in lines:
            order.append(name)
            lines[name] = first_line

    for name in order:
        if name not in signatures:
            raise ParseError(filename, lines[name], 1, {f"'{name} :'"})
        if name not in definitions:
            raise ParseError(filename, lines[name], 1, {f"'{name} ='"})
        signature, span = signatures[name]
        source.declarations.append(Declaration(name, signature, definitions[name][0], span))

    logger.debug(f"Parsed {len(source)} declaration(s) from {filename}.")
    return source
