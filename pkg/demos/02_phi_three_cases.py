"""
The map phi and its three cases
===============================

``phi`` cuts a path into ``P Q R`` and rearranges the marked factorization of
``Q``.  Each of the three example pairs below exercises one of the cases.
"""

from dyckstat import DyckWord, compute_stats, forward_decompose, marked_factorization, phi, phi_inverse, render_ascii

examples = [
    "NNNNNENENEENNENENNEENEENEEEE",
    "NNNNNNNENEENEENNEENEEEENENEE",
    "NNNNNENENEENENNNEENENENEEEEE",
]

for word in examples:
    dec = forward_decompose(word)
    fac = marked_factorization(dec.Q)
    image, case = phi(word)
    print(f"{case}: Q = {dec.Q}  R = {dec.R}")
    print(f"  runs between prime factors of Q: {fac.runs}")
    print(f"  {word}\n  -> {image}")
    before, after = compute_stats(word), compute_stats(image)
    print(f"  returns {before.returns} -> {after.returns}, ldr {before.ldr} -> {after.ldr}, "
          f"rises kept: {before.rises == after.rises}")
    assert phi_inverse(image) == (DyckWord(word), case)

print(render_ascii(phi(examples[0])[0]))
