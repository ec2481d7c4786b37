"""Text syntax for polynomials in x with coefficients in one of three fields.

Grammar (whitespace-insensitive, case-sensitive)::

    poly    := ['+'|'-'] term (('+'|'-') term)*
    term    := factor ('*' factor)*
    factor  := atom ('^' nat)?
    atom    := integer | 'x' | symbol | '(' ratexpr ')'
    ratexpr := same shape, but '/' is allowed and 'x' is not

Modes: ``fp`` (integers mod p), ``ratfunc`` (the symbol ``T`` of F_p(T)),
``sym`` (the declared base symbols and their ``p``-suffixed derivatives).
"""

import re
from fractions import Fraction

from .fields.fp import PrimeField
from .fields.ratfunc import RationalFunctionField
from .fields.symbolic import SymbolicField
from .upoly import UPoly

MODES = ('fp', 'ratfunc', 'sym')

_TOKEN = re.compile(r'\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))')


class ParseError(ValueError):
    def __init__(self, msg, pos=None):
        self.pos = pos
        super().__init__(msg if pos is None else f'{msg} at position {pos}')


def _tokenize(text):
    out = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        num, name, op = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            out.append(('num', int(num), start))
        elif name is not None:
            out.append(('name', name, start))
        else:
            if op not in '+-*/^()':
                raise ParseError(f'unexpected character {op!r}', start)
            out.append(('op', op, start))
        pos = m.end()
    out.append(('end', None, len(text)))
    return out


def make_field(mode, p=None, variables=None):
    if mode not in MODES:
        raise ParseError(f'unknown mode {mode!r}')
    if mode == 'sym':
        return SymbolicField(tuple(variables) if variables else ('a', 'b', 'c', 'd'))
    if p is None:
        raise ParseError(f'modulus p is required in {mode} mode')
    try:
        return PrimeField(p) if mode == 'fp' else RationalFunctionField(p)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


class _Parser:
    def __init__(self, text, field, var='x'):
        self.toks = _tokenize(text)
        self.i = 0
        self.field = field
        self.var = var
        if isinstance(field, SymbolicField):
            self.symbols = {v: field.var(v) for v in field.variables}
        elif isinstance(field, RationalFunctionField):
            self.symbols = {'T': field.T}
        else:
            self.symbols = {}
        if var in self.symbols:
            raise ParseError(f'main variable {var!r} clashes with a coefficient symbol')

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def accept(self, op):
        kind, val, _ = self.peek()
        if kind == 'op' and val == op:
            self.i += 1
            return True
        return False

    def expect(self, op):
        if not self.accept(op):
            kind, val, pos = self.peek()
            got = 'end of input' if kind == 'end' else repr(val)
            raise ParseError(f'expected {op!r}, got {got}', pos)

    def done(self):
        kind, val, pos = self.peek()
        if kind != 'end':
            raise ParseError(f'unexpected {val!r}', pos)

    def constant(self, n):
        if isinstance(self.field, SymbolicField):
            return self.field(Fraction(n))
        return self.field(n)

    def nat(self):
        kind, val, pos = self.take()
        if kind != 'num':
            raise ParseError('expected a natural exponent', pos)
        return val

    # ---- polynomial level
    def poly(self):
        neg = False
        if self.accept('-'):
            neg = True
        else:
            self.accept('+')
        acc = self.term()
        if neg:
            acc = -acc
        while True:
            if self.accept('+'):
                acc = acc + self.term()
            elif self.accept('-'):
                acc = acc - self.term()
            else:
                return acc

    def term(self):
        acc = self.factor()
        while True:
            if self.accept('*'):
                acc = acc * self.factor()
            elif self.peek()[:2] == ('op', '/'):
                raise ParseError('division is only allowed inside parentheses', self.peek()[2])
            else:
                return acc

    def factor(self):
        base = self.atom()
        if self.accept('^'):
            base = base ** self.nat()
        return base

    def atom(self):
        F = self.field
        kind, val, pos = self.take()
        if kind == 'num':
            return UPoly([self.constant(val)], F, self.var)
        if kind == 'name':
            if val == self.var:
                return UPoly.gen(F, self.var)
            if val not in self.symbols:
                raise ParseError(f'unknown symbol {val!r}', pos)
            return UPoly([self.symbols[val]], F, self.var)
        if kind == 'op' and val == '(':
            c = self.ratexpr()
            self.expect(')')
            return UPoly([c], F, self.var)
        raise ParseError('expected a term' if kind != 'end' else 'unexpected end of input', pos)

    # ---- coefficient level
    def ratexpr(self):
        neg = False
        if self.accept('-'):
            neg = True
        else:
            self.accept('+')
        acc = self.rterm()
        if neg:
            acc = -acc
        while True:
            if self.accept('+'):
                acc = acc + self.rterm()
            elif self.accept('-'):
                acc = acc - self.rterm()
            else:
                return acc

    def rterm(self):
        acc = self.rfactor()
        while True:
            if self.accept('*'):
                acc = acc * self.rfactor()
            elif self.accept('/'):
                pos = self.peek()[2]
                d = self.rfactor()
                if not d:
                    raise ParseError('division by zero', pos)
                acc = acc / d
            else:
                return acc

    def rfactor(self):
        base = self.ratom()
        if self.accept('^'):
            base = base ** self.nat()
        return base

    def ratom(self):
        kind, val, pos = self.take()
        if kind == 'num':
            return self.constant(val)
        if kind == 'name':
            if val == self.var:
                raise ParseError(f'{self.var!r} is not allowed inside a coefficient', pos)
            if val not in self.symbols:
                raise ParseError(f'unknown symbol {val!r}', pos)
            return self.symbols[val]
        if kind == 'op' and val == '(':
            c = self.ratexpr()
            self.expect(')')
            return c
        raise ParseError('expected a coefficient' if kind != 'end' else 'unexpected end of input', pos)


def parse_poly(text, mode='fp', p=None, variables=None, field=None):
    """Parse ``text`` into a :class:`UPoly` over the field selected by ``mode``.

    >>> str(parse_poly('x^5+x^2+7*x+9', 'fp', p=11))
    'x^5+x^2+7*x+9'
    """
    F = field or make_field(mode, p, variables)
    parser = _Parser(text, F)
    out = parser.poly()
    parser.done()
    return out


def parse_scalar(text, mode='fp', p=None, variables=None, field=None):
    """Parse a coefficient expression (no x; '/' allowed)."""
    F = field or make_field(mode, p, variables)
    parser = _Parser(text, F)
    out = parser.ratexpr()
    parser.done()
    return out
