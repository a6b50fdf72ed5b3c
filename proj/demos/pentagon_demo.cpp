// Builds the frieze of a pentagon split into a triangle and a square, prints
// it in every format, and shows the diamond rule holding on one diamond.
#include <iostream>

#include <frieze/frieze.hpp>

int main() {
    using namespace frieze;

    auto d = PolygonDissection::validate(5, {{0, 2}});
    FriezePattern f = build_from_dissection(d);
    auto gens = default_generators(part_sizes(d));

    std::cout << "dissection " << to_compact(d) << ", width " << f.width() << "\n\n";
    std::cout << render_frieze(f, gens, {TableFormat::Ascii, 3, false}) << '\n';
    std::cout << render_frieze(f, gens, {TableFormat::Latex, 0, false}) << '\n';

    const RingElement &a = f.entry(1, 0), &b = f.entry(1, 1);
    std::cout << "diamond rule at the top left: " << render(a, gens) << " * " << render(b, gens)
              << " - 1 * " << render(f.entry(2, 0), gens) << " = "
              << render(a * b - f.entry(2, 0), gens) << '\n';
    return 0;
}
