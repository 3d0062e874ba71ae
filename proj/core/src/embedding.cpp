#include "knot/embedding.hpp"

#include <algorithm>
#include <map>

namespace knot {

Diagram::Diagram(std::vector<std::array<EndRef, 4>> att, std::vector<unsigned char> over)
    : att_(std::move(att)), over_(std::move(over)) {
    for (int v = 0; v < crossings(); v++)
        for (int s = 0; s < 4; s++) {
            const EndRef& e = att_[v][s];
            if (e.v < 0 || e.v >= crossings() || e.s < 0 || e.s >= 4 ||
                !(att_[e.v][e.s] == EndRef{v, s}))
                throw std::invalid_argument("attachment map is not an end involution");
        }
    if (!over_.empty() && over_.size() != att_.size())
        throw std::invalid_argument("over flag count mismatch");
}

int Diagram::face_count() const {
    int n = crossings();
    std::vector<char> seen(4 * n, 0);
    int faces = 0;
    for (int start = 0; start < 4 * n; start++) {
        if (seen[start]) continue;
        faces++;
        int cur = start;
        do {
            seen[cur] = 1;
            const EndRef& e = att_[cur / 4][(cur % 4 + 1) % 4];
            cur = e.v * 4 + e.s;
        } while (cur != start);
    }
    return faces;
}

std::vector<EndRef> Diagram::circuit_from(EndRef first_arrival, bool forward) const {
    EndRef start = forward ? first_arrival
                           : EndRef{first_arrival.v, (first_arrival.s + 2) % 4};
    std::vector<EndRef> out;
    EndRef cur = start;
    do {
        out.push_back(cur);
        cur = att_[cur.v][(cur.s + 2) % 4];
    } while (!(cur == start) && static_cast<int>(out.size()) <= 2 * crossings());
    if (static_cast<int>(out.size()) != 2 * crossings()) return {};
    return out;
}

std::vector<EndRef> Diagram::circuit() const {
    if (crossings() == 0) return {};
    return circuit_from({0, 0}, true);
}

std::vector<int> Diagram::word() const {
    std::vector<int> w;
    for (const EndRef& e : circuit()) w.push_back(e.v);
    return w;
}

GaussCode Diagram::read_code(const std::vector<int>& eps) const {
    auto circ = circuit();
    std::vector<int> letters;
    std::optional<std::vector<Strand>> ou;
    if (has_ou()) ou.emplace();
    for (const EndRef& e : circ) {
        letters.push_back(e.v);
        if (ou) ou->push_back(over_[e.v] == e.s % 2 ? Strand::Over : Strand::Under);
    }
    std::optional<std::vector<int>> sign;
    if (!eps.empty()) sign = eps;
    return GaussCode(std::move(letters), std::move(ou), std::move(sign));
}

Diagram Diagram::reflected() const {
    // Slot map s -> (4-s)%4 reverses every rotation while keeping the
    // transversal slot pairs, so OU flags stay meaningful.
    auto sigma = [](int s) { return (4 - s) % 4; };
    std::vector<std::array<EndRef, 4>> att(att_.size());
    for (int v = 0; v < crossings(); v++)
        for (int s = 0; s < 4; s++) {
            const EndRef& e = att_[v][sigma(s)];
            att[v][s] = {e.v, sigma(e.s)};
        }
    return Diagram(std::move(att), over_);
}

bool Diagram::reduced() const {
    auto w = word();
    int m = static_cast<int>(w.size());
    for (int i = 0; i < m; i++)
        if (w[i] == w[(i + 1) % m]) return false;
    return m > 0;
}

namespace {

// Attachment map for one assignment of second-passage rotations. The first
// passage of each crossing arrives at slot 0 and leaves at slot 2; bit v of
// `mask` picks arrival slot 3 instead of 1 for the second passage.
std::vector<std::array<EndRef, 4>> build_attachments(const GaussCode& code, unsigned long mask) {
    int n = code.crossings();
    int m = code.length();
    std::vector<char> visited(n, 0);
    std::vector<EndRef> arrive(m), depart(m);
    for (int i = 0; i < m; i++) {
        int v = code.letters()[i];
        int in = visited[v] ? ((mask >> v) & 1 ? 3 : 1) : 0;
        visited[v] = 1;
        arrive[i] = {v, in};
        depart[i] = {v, (in + 2) % 4};
    }
    std::vector<std::array<EndRef, 4>> att(n);
    for (int i = 0; i < m; i++) {
        const EndRef& a = depart[i];
        const EndRef& b = arrive[(i + 1) % m];
        att[a.v][a.s] = b;
        att[b.v][b.s] = a;
    }
    return att;
}

std::vector<unsigned char> over_flags(const GaussCode& code) {
    if (!code.has_ou()) return {};
    // First passage uses the {0,2} slot pair.
    std::vector<unsigned char> over(code.crossings());
    for (int v = 0; v < code.crossings(); v++)
        over[v] = code.ou()[code.occurrences(v).first] == Strand::Over ? 0 : 1;
    return over;
}

} // namespace

std::optional<Diagram> build_embedding(const GaussCode& code) {
    int n = code.crossings();
    if (n == 0) return Diagram{};
    auto over = over_flags(code);
    for (unsigned long mask = 0; mask < (1ul << n); mask++) {
        Diagram d(build_attachments(code, mask), over);
        if (d.spherical()) return d;
    }
    return std::nullopt;
}

SignData compute_signs(const Diagram& d) {
    if (!d.has_ou())
        throw Error(ErrorKind::MissingOU, "signs need over/under data");
    int n = d.crossings();
    SignData out;
    out.epsilon.assign(n, 0);
    out.path_sign.assign(n, 0);
    std::vector<int> in_over(n, -1), in_under(n, -1), in_first(n, -1);
    for (const EndRef& e : d.circuit()) {
        (d.over_pair(e.v) == e.s % 2 ? in_over : in_under)[e.v] = e.s;
        if (in_first[e.v] < 0)
            in_first[e.v] = e.s;
        else
            out.path_sign[e.v] = in_first[e.v] == (e.s + 1) % 4 ? +1 : -1;
    }
    for (int v = 0; v < n; v++) {
        out.epsilon[v] = in_under[v] == (in_over[v] + 1) % 4 ? +1 : -1;
        out.writhe += out.epsilon[v];
    }
    return out;
}

Diagram validate_signed_code(const GaussCode& code) {
    if (!code.has_ou())
        throw Error(ErrorKind::MissingOU, "signed validation needs over/under data");
    if (!code.has_sign())
        throw Error(ErrorKind::MissingSigns, "signed validation needs crossing signs");
    int n = code.crossings();
    auto over = over_flags(code);
    bool any_spherical = false;
    std::vector<int> negated(n);
    for (int v = 0; v < n; v++) negated[v] = -code.sign()[v];
    for (unsigned long mask = 0; mask < (1ul << n); mask++) {
        Diagram d(build_attachments(code, mask), over);
        if (!d.spherical()) continue;
        any_spherical = true;
        auto sd = compute_signs(d);
        if (sd.epsilon == code.sign()) return d;
        if (sd.epsilon == negated) return d.reflected();
    }
    if (!any_spherical)
        throw Error(ErrorKind::NotRealizable, "word has no spherical embedding");
    throw Error(ErrorKind::SignMismatch, "no embedding reproduces the given signs");
}

SignedDiagram make_signed(const GaussCode& code) {
    GaussCode c = code.has_ou() ? code : assign_alternating(code);
    if (c.has_sign()) {
        Diagram d = validate_signed_code(c);
        return {std::move(d), c.sign()};
    }
    auto d = build_embedding(c);
    if (!d)
        throw Error(ErrorKind::NotRealizable, "word has no spherical embedding");
    auto sd = compute_signs(*d);
    return {std::move(*d), std::move(sd.epsilon)};
}

SignedDiagram mirror_diagram(const SignedDiagram& sd) {
    SignedDiagram out;
    out.d = sd.d;
    auto& over = out.d.mutable_over();
    for (auto& o : over) o ^= 1;
    out.eps.reserve(sd.eps.size());
    for (int e : sd.eps) out.eps.push_back(-e);
    return out;
}

std::string diagram_key(const SignedDiagram& sd) {
    return canonicalize(sd.code()).to_string();
}

ChordDiagram diagram_to_cd(const Diagram& d, const std::vector<int>& eps) {
    auto circ = d.circuit();
    int m = static_cast<int>(circ.size());
    std::vector<int> pairing(m, -1), first_pos(d.crossings(), -1), first_slot(d.crossings(), -1);
    std::vector<int> tail(d.crossings(), -1);
    for (int i = 0; i < m; i++) {
        int v = circ[i].v;
        if (first_pos[v] < 0) {
            first_pos[v] = i;
            first_slot[v] = circ[i].s;
        } else {
            pairing[first_pos[v]] = i;
            pairing[i] = first_pos[v];
            // Arrow tail sits on the positive crossing path's occurrence.
            bool first_positive = first_slot[v] == (circ[i].s + 1) % 4;
            tail[v] = first_positive ? first_pos[v] : i;
        }
    }
    ChordDiagram cd(std::move(pairing));
    if (!eps.empty()) {
        std::vector<int> sign(d.crossings());
        for (int v = 0; v < d.crossings(); v++)
            sign[cd.chord_of()[first_pos[v]]] = eps[v];
        cd.set_sign(std::move(sign));
    }
    std::vector<int> arrow(d.crossings());
    for (int v = 0; v < d.crossings(); v++)
        arrow[cd.chord_of()[first_pos[v]]] = tail[v];
    cd.set_arrow(std::move(arrow));
    return cd;
}

std::vector<int> face_ids(const Diagram& d) {
    int n = d.crossings();
    std::vector<int> face(4 * n, -1);
    int next = 0;
    for (int start = 0; start < 4 * n; start++) {
        if (face[start] >= 0) continue;
        int cur = start;
        do {
            face[cur] = next;
            const EndRef& e = d.att(cur / 4, (cur % 4 + 1) % 4);
            cur = e.v * 4 + e.s;
        } while (cur != start);
        next++;
    }
    return face;
}

long long determinant(const Diagram& d) {
    int n = d.crossings();
    if (n == 0) return 1;
    auto face = face_ids(d);
    int F = 1 + *std::max_element(face.begin(), face.end());
    // Checkerboard coloring: faces across one edge get opposite colors. The
    // two faces along an edge are the ones carrying its two darts' corners.
    std::vector<int> color(F, -1);
    color[face[0]] = 0;
    std::vector<int> stack{face[0]};
    std::vector<std::vector<int>> side(F);
    for (int v = 0; v < n; v++)
        for (int s = 0; s < 4; s++) {
            // the two darts of one edge trace the faces on its two sides
            const EndRef& e = d.att(v, s);
            int f1 = face[v * 4 + s];
            int f2 = face[e.v * 4 + e.s];
            side[f1].push_back(f2);
            side[f2].push_back(f1);
        }
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int g : side[f])
            if (color[g] < 0) {
                color[g] = 1 - color[f];
                stack.push_back(g);
            }
    }
    // Kirchhoff on the black multigraph: one edge per crossing between the
    // two opposite black corners.
    std::vector<int> black;
    std::vector<int> idx(F, -1);
    for (int f = 0; f < F; f++)
        if (color[f] == 0) {
            idx[f] = static_cast<int>(black.size());
            black.push_back(f);
        }
    int B = static_cast<int>(black.size());
    if (B == 1) return 1;
    std::vector<std::vector<long long>> lap(B, std::vector<long long>(B, 0));
    for (int v = 0; v < n; v++) {
        int s0 = color[face[v * 4 + 0]] == 0 ? 0 : 1;
        int a = idx[face[v * 4 + s0]], b = idx[face[v * 4 + s0 + 2]];
        if (a == b) continue;  // self-loop, no spanning tree contribution
        lap[a][a]++;
        lap[b][b]++;
        lap[a][b]--;
        lap[b][a]--;
    }
    // Bareiss fraction-free elimination on the (B-1)x(B-1) minor.
    int m = B - 1;
    long long prev = 1;
    std::vector<std::vector<long long>> a(m, std::vector<long long>(m));
    for (int i = 0; i < m; i++)
        for (int j = 0; j < m; j++) a[i][j] = lap[i][j];
    for (int k = 0; k < m; k++) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int r = k + 1; r < m; r++)
                if (a[r][k] != 0) p = r;
            if (p < 0) return 0;
            std::swap(a[k], a[p]);  // sign change irrelevant, magnitude taken below
        }
        for (int i = k + 1; i < m; i++)
            for (int j = k + 1; j < m; j++) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    long long det = a[m - 1][m - 1];
    return det < 0 ? -det : det;
}

std::optional<TangleBoundary> tangle_boundary(const Diagram& d, const std::vector<char>& inside) {
    int n = d.crossings();
    // Face walk of the induced sub-map: step to the next end in rotation; if
    // its edge leaves the region, record a stub and bounce off it.
    std::vector<char> seen(4 * n, 0);
    std::vector<std::vector<EndRef>> stubs_per_face;
    for (int start = 0; start < 4 * n; start++) {
        if (seen[start] || !inside[start / 4]) continue;
        std::vector<EndRef> stubs;
        int cur = start;
        do {
            seen[cur] = 1;
            int v = cur / 4, u = (cur % 4 + 1) % 4;
            const EndRef& e = d.att(v, u);
            if (inside[e.v]) {
                cur = e.v * 4 + e.s;
            } else {
                stubs.push_back({v, u});
                cur = v * 4 + u;
            }
        } while (cur != start);
        stubs_per_face.push_back(std::move(stubs));
    }
    int total = 0;
    const std::vector<EndRef>* boundary = nullptr;
    for (const auto& f : stubs_per_face) {
        total += static_cast<int>(f.size());
        if (!f.empty()) boundary = &f;
    }
    if (total != 4 || !boundary || boundary->size() != 4) return std::nullopt;

    TangleBoundary tb;
    std::copy(boundary->begin(), boundary->end(), tb.stubs.begin());
    auto stub_index = [&](EndRef e) {
        for (int i = 0; i < 4; i++)
            if (tb.stubs[i] == e) return i;
        return -1;
    };
    tb.strand_mate = {-1, -1, -1, -1};
    for (int i = 0; i < 4; i++) {
        if (tb.strand_mate[i] >= 0) continue;
        // Enter at stub i and ride the strand until it leaves the region.
        EndRef cur = tb.stubs[i];
        for (;;) {
            EndRef out{cur.v, (cur.s + 2) % 4};
            const EndRef& next = d.att(out.v, out.s);
            if (!inside[next.v]) {
                int j = stub_index(out);
                if (j < 0) return std::nullopt;
                tb.strand_mate[i] = j;
                tb.strand_mate[j] = i;
                break;
            }
            cur = next;
        }
        if (tb.strand_mate[i] == i) return std::nullopt;
    }
    return tb;
}

} // namespace knot
