#include "knot/chord_diagram.hpp"

#include <stdexcept>

namespace knot {

ChordDiagram::ChordDiagram(std::vector<int> pairing) : pairing_(std::move(pairing)) {
    int m = static_cast<int>(pairing_.size());
    chord_of_.assign(m, -1);
    int next = 0;
    for (int i = 0; i < m; i++) {
        int j = pairing_[i];
        if (j < 0 || j >= m || j == i || pairing_[j] != i)
            throw std::invalid_argument("pairing is not a fixed-point-free involution");
        if (chord_of_[i] < 0) {
            chord_of_[i] = chord_of_[j] = next++;
        }
    }
}

ChordDiagram build_chord_diagram(const GaussCode& code) {
    int m = code.length();
    std::vector<int> pairing(m);
    for (int lab = 0; lab < code.crossings(); lab++) {
        auto [a, b] = code.occurrences(lab);
        pairing[a] = b;
        pairing[b] = a;
    }
    ChordDiagram cd(std::move(pairing));
    if (code.has_sign()) {
        std::vector<int> sign(code.crossings());
        for (int lab = 0; lab < code.crossings(); lab++)
            sign[cd.chord_of()[code.occurrences(lab).first]] = code.sign()[lab];
        cd.set_sign(std::move(sign));
    }
    if (code.has_ou()) {
        std::vector<int> tail(code.crossings());
        for (int lab = 0; lab < code.crossings(); lab++) {
            auto [a, b] = code.occurrences(lab);
            tail[cd.chord_of()[a]] = code.ou()[a] == Strand::Over ? a : b;
        }
        cd.set_arrow(std::move(tail));
    }
    return cd;
}

bool chords_interlaced(const ChordDiagram& cd, int chord_a, int chord_b) {
    if (chord_a == chord_b) return false;
    int m = cd.slots();
    int a0 = -1, a1 = -1, b0 = -1, b1 = -1;
    for (int i = 0; i < m; i++) {
        if (cd.chord_of()[i] == chord_a) (a0 < 0 ? a0 : a1) = i;
        if (cd.chord_of()[i] == chord_b) (b0 < 0 ? b0 : b1) = i;
    }
    auto between = [&](int x) { return x > a0 && x < a1; };
    return between(b0) != between(b1);
}

LinearChordDiagram to_linear(const ChordDiagram& cd, int cut) {
    int m = cd.slots();
    std::vector<int> pairing(m);
    auto shift = [&](int s) { return ((s - cut) % m + m) % m; };
    for (int i = 0; i < m; i++) pairing[shift(i)] = shift(cd.partner(i));
    LinearChordDiagram out;
    out.cd = ChordDiagram(std::move(pairing));
    out.cut = cut;
    if (cd.has_sign()) {
        std::vector<int> sign(cd.size());
        for (int i = 0; i < m; i++)
            sign[out.cd.chord_of()[shift(i)]] = cd.chord_sign()[cd.chord_of()[i]];
        out.cd.set_sign(std::move(sign));
    }
    if (cd.has_arrow()) {
        std::vector<int> tail(cd.size());
        for (int c = 0; c < cd.size(); c++) {
            int t = cd.arrow_tail()[c];
            tail[out.cd.chord_of()[shift(t)]] = shift(t);
        }
        out.cd.set_arrow(std::move(tail));
    }
    return out;
}

} // namespace knot
