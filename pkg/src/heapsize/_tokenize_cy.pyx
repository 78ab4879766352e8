# cython: language_level=3
"""Compiled tokenizer kernel; behaviour mirrors ``_tokenize_py.split_forms``."""

from cpython.unicode cimport Py_UNICODE_ISSPACE, Py_UNICODE_ISALNUM


cdef inline bint _pure_digit(str s, Py_ssize_t a, Py_ssize_t b):
    cdef Py_UCS4 ch
    cdef Py_ssize_t i
    for i in range(a, b):
        ch = s[i]
        if ch < 48 or ch > 57:
            return False
    return True


cdef inline void _emit(list out, str text, Py_ssize_t a, Py_ssize_t b,
                       bint strip, bint keep_digits):
    if strip:
        while a < b and not Py_UNICODE_ISALNUM(text[a]):
            a += 1
        while b > a and not Py_UNICODE_ISALNUM(text[b - 1]):
            b -= 1
    if a >= b:
        return
    if not keep_digits and _pure_digit(text, a, b):
        return
    out.append(text[a:b])


def split_forms(str text, bint strip, bint keep_digits):
    cdef list out = []
    cdef Py_ssize_t n = len(text)
    cdef Py_ssize_t i = 0, start = -1
    cdef Py_UCS4 ch
    while i < n:
        ch = text[i]
        if Py_UNICODE_ISSPACE(ch):
            if start >= 0:
                _emit(out, text, start, i, strip, keep_digits)
                start = -1
        elif strip and ch == 47:  # "/"
            if start >= 0:
                _emit(out, text, start, i, strip, keep_digits)
            start = -1
        elif start < 0:
            start = i
        i += 1
    if start >= 0:
        _emit(out, text, start, n, strip, keep_digits)
    return out
