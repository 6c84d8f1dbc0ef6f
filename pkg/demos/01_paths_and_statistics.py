"""
Dyck paths and their statistics
===============================

Parse a path, look at it, and read off the statistics the rest of the
package is built around.
"""

from dyckstat import compute_stats, marked_factorization, parse_word, prime_components, render_ascii
from dyckstat.words import reverse_complement

# Paths can be written with N/E, U/D or 1/0 steps.
D = parse_word("NNNNNENENEENNENENNEENEENEEEE")
assert D == parse_word("UUUUUDUDUDDUUDUDUUDDUDDUDDDD", "UD")
print(render_ascii(D))

# returns, last double rise height, first double fall position, rise set
print(compute_stats(D))

# A path with several returns splits into prime pieces, one per return.
print([str(p) for p in prime_components("NNENEENE")])

# Inside a path that never comes back to its start level, unmatched north
# steps separate the prime pieces.
fac = marked_factorization("NNNNNENENEENNENENNEE")
print(fac.leading_run, fac.items)

# Reflecting across x + y = n turns the last double rise into the first
# double fall: fdf(reflected) = n - ldr(original).
E = parse_word("NNENEENE")
print(compute_stats(reverse_complement(E)).fdf, E.semilength - compute_stats(E).ldr)
