# A real quadratic field with p inert: user-supplied zeta value, split branch at p.
from pathlib import Path

from ssmass import count_components, count_superspecial, delta_prime, load_deck, supersingular_dimension

inp = load_deck(Path(__file__).parent / "decks" / "real_quadratic_inert.json")
print("Delta' =", set(delta_prime(inp)))  # f = 2 at p, so D is unramified there
print("dimension", supersingular_dimension(inp))
for fn in (count_components, count_superspecial):
    report = fn(inp)
    print(fn.__name__, report.count)
    for name, value, tag in report.factors:
        print(f"    {name:16} {str(value):>6}   {tag}")
