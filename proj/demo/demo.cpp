// Small tour of the library: build a machine by hand, run it, look at its trace,
// then use the codec and a free-group translation.

#include <iostream>

#include "hva/hva.hpp"

using namespace hva;

int main() {
    // a^n b^n with a non-blind two-dimensional machine: [1+c, 1] tracks a counter c.
    MachineBuilder b("anbn_guarded", ModeFlags{Head::realtime, Control::deterministic, false}, QVector{1, 1},
                     {U'a', U'b'});
    b.start("as").accept("as").accept("bs");
    b.add("as", U'a', "as", QMatrix{{1, 0}, {1, 1}});
    b.add("as", U'b', Guard::neq, "bs", QMatrix{{1, 0}, {-1, 1}});
    b.add("bs", U'b', Guard::neq, "bs", QMatrix{{1, 0}, {-1, 1}});
    HvaMachine m = validated(b.build());

    for (std::u32string w : {U"aabb", U"aab", U"abb"}) {
        auto v = run(m, w);
        std::cout << utf8_encode(w) << ": " << to_string(v.outcome) << "\n";
    }
    auto v = run(m, U"ab");
    std::cout << "trace of ab: " << trace_to_json(m, *v.trace).dump() << "\n";

    // Stern-Brocot: "011" over letters 1 -> '1', 2 -> '0'
    auto code = stern_brocot::encode(2, {2, 1, 1});
    std::cout << "encode 011 = " << code.to_string() << "\n";
    std::cout << "decode [2,2] is " << (stern_brocot::decode(QVector{2, 2}) ? "valid" : "invalid") << "\n";

    // word problem of F2 as a one-way blind HVA of dimension 2
    auto hva_f2 = translate_efa_f2(zoo::wp_f2());
    std::cout << "aBAb in WP(F2): " << to_string(run(hva_f2, U"aBAb").outcome) << "\n";
    std::cout << "abBA in WP(F2): " << to_string(run(hva_f2, U"abBA").outcome) << "\n";
    return 0;
}
