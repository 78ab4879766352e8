"""Pure-Python tokenizer kernel.

Reference implementation of the word-form splitting rules; the Cython kernel
in ``_tokenize_cy.pyx`` must produce identical output for every input.
"""


def _is_pure_digit(tok):
    for ch in tok:
        if ch < "0" or ch > "9":
            return False
    return True


def split_forms(text, strip, keep_digits):
    """Split ``text`` into word forms.

    Whitespace runs separate raw tokens. With ``strip`` set, each raw token is
    further split on ``/`` and every piece loses its leading and trailing
    non-alphanumeric characters. Empty pieces are dropped, and pieces made only
    of ASCII digits are dropped unless ``keep_digits``.
    """
    out = []
    for raw in text.split():
        pieces = raw.split("/") if strip else (raw,)
        for piece in pieces:
            if strip:
                i, j = 0, len(piece)
                while i < j and not piece[i].isalnum():
                    i += 1
                while j > i and not piece[j - 1].isalnum():
                    j -= 1
                piece = piece[i:j]
                if not piece:
                    continue
            if not keep_digits and _is_pure_digit(piece):
                continue
            out.append(piece)
    return out
