#include "knot/gauss_code.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace knot {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::NotDoubleOccurrence: return "NotDoubleOccurrence";
        case ErrorKind::InconsistentOU: return "InconsistentOU";
        case ErrorKind::MixedDecoration: return "MixedDecoration";
        case ErrorKind::Undecorated: return "Undecorated";
        case ErrorKind::OddGap: return "OddGap";
        case ErrorKind::NotRealizable: return "NotRealizable";
        case ErrorKind::SignMismatch: return "SignMismatch";
        case ErrorKind::MissingOU: return "MissingOU";
        case ErrorKind::MissingSigns: return "MissingSigns";
        case ErrorKind::NotReduced: return "NotReduced";
        case ErrorKind::NotAlternating: return "NotAlternating";
        case ErrorKind::NotATangle: return "NotATangle";
        case ErrorKind::NotABundle: return "NotABundle";
        case ErrorKind::WouldSplit: return "WouldSplit";
        case ErrorKind::SplitsIntoLink: return "SplitsIntoLink";
        case ErrorKind::InvalidOpportunity: return "InvalidOpportunity";
    }
    return "Error";
}

namespace {

struct RawToken {
    std::string label;
    std::optional<Strand> ou;
    std::optional<int> sign;
};

std::vector<RawToken> tokenize(std::string_view text) {
    std::vector<RawToken> out;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '#') break;
        RawToken t;
        size_t i = 0;
        if (tok[0] == 'O' || tok[0] == 'U') {
            t.ou = tok[0] == 'O' ? Strand::Over : Strand::Under;
            i = 1;
        }
        size_t start = i;
        while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) i++;
        if (i == start)
            throw Error(ErrorKind::SyntaxError, "bad token '" + tok + "'");
        t.label = tok.substr(start, i - start);
        if (i < tok.size()) {
            if ((tok[i] == '+' || tok[i] == '-') && i + 1 == tok.size() && t.ou) {
                t.sign = tok[i] == '+' ? +1 : -1;
            } else {
                throw Error(ErrorKind::SyntaxError, "bad token '" + tok + "'");
            }
        }
        if (t.label == "0")
            throw Error(ErrorKind::SyntaxError, "labels start at 1, got '" + tok + "'");
        out.push_back(std::move(t));
    }
    return out;
}

} // namespace

GaussCode::GaussCode(std::vector<int> letters,
                     std::optional<std::vector<Strand>> ou,
                     std::optional<std::vector<int>> sign)
    : letters_(std::move(letters)), ou_(std::move(ou)), sign_(std::move(sign)) {
    int n = crossings();
    std::vector<int> count(n, 0);
    for (int x : letters_) {
        if (x < 0 || x >= n)
            throw Error(ErrorKind::NotDoubleOccurrence, "labels not contiguous after normalization");
        count[x]++;
    }
    for (int x = 0; x < n; x++)
        if (count[x] != 2)
            throw Error(ErrorKind::NotDoubleOccurrence,
                        "label " + std::to_string(x + 1) + " occurs " + std::to_string(count[x]) + " times");
    if (ou_) {
        if (static_cast<int>(ou_->size()) != length())
            throw Error(ErrorKind::InconsistentOU, "OU flag count mismatch");
        std::vector<int> over(n, 0), under(n, 0);
        for (int i = 0; i < length(); i++)
            ((*ou_)[i] == Strand::Over ? over : under)[letters_[i]]++;
        for (int x = 0; x < n; x++)
            if (over[x] != 1)
                throw Error(ErrorKind::InconsistentOU,
                            "label " + std::to_string(x + 1) + " occurs " + std::to_string(over[x]) + " times Over");
    }
    if (sign_ && static_cast<int>(sign_->size()) != n)
        throw Error(ErrorKind::SignMismatch, "sign count mismatch");
    display_.resize(n);
    for (int x = 0; x < n; x++) display_[x] = std::to_string(x + 1);
}

GaussCode GaussCode::parse(std::string_view text) {
    auto toks = tokenize(text);
    bool any_ou = false, all_ou = true, any_sign = false, all_sign = true;
    for (const auto& t : toks) {
        if (t.ou) any_ou = true; else all_ou = false;
        if (t.sign) any_sign = true; else all_sign = false;
    }
    if ((any_ou && !all_ou) || (any_sign && !all_sign))
        throw Error(ErrorKind::MixedDecoration, "tokens mix decoration kinds");

    std::map<std::string, int> ids;
    std::vector<int> letters;
    std::vector<std::string> display;
    for (const auto& t : toks) {
        auto it = ids.find(t.label);
        if (it == ids.end()) {
            it = ids.emplace(t.label, static_cast<int>(ids.size())).first;
            display.push_back(t.label);
        }
        letters.push_back(it->second);
    }

    std::optional<std::vector<Strand>> ou;
    if (all_ou && !toks.empty()) {
        ou.emplace();
        for (const auto& t : toks) ou->push_back(*t.ou);
    }
    std::optional<std::vector<int>> sign;
    if (all_sign && !toks.empty()) {
        sign.emplace(ids.size(), 0);
        for (size_t i = 0; i < toks.size(); i++) {
            int lab = letters[i];
            int s = *toks[i].sign;
            if ((*sign)[lab] != 0 && (*sign)[lab] != s)
                throw Error(ErrorKind::InconsistentOU,
                            "label " + toks[i].label + " carries both signs");
            (*sign)[lab] = s;
        }
    }
    GaussCode code(std::move(letters), std::move(ou), std::move(sign));
    code.display_ = std::move(display);
    return code;
}

std::pair<int, int> GaussCode::occurrences(int label) const {
    int a = -1, b = -1;
    for (int i = 0; i < length(); i++)
        if (letters_[i] == label) (a < 0 ? a : b) = i;
    return {a, b};
}

int GaussCode::gap(int label) const {
    auto [a, b] = occurrences(label);
    return b - a;
}

bool GaussCode::all_gaps_odd() const {
    for (int x = 0; x < crossings(); x++)
        if (gap(x) % 2 == 0) return false;
    return true;
}

bool GaussCode::reduced() const {
    int m = length();
    for (int i = 0; i < m; i++)
        if (letters_[i] == letters_[(i + 1) % m]) return false;
    return true;
}

std::string GaussCode::to_string() const {
    std::string out;
    for (int i = 0; i < length(); i++) {
        if (i) out += ' ';
        if (ou_) out += (*ou_)[i] == Strand::Over ? 'O' : 'U';
        out += display_[letters_[i]];
        if (sign_) out += (*sign_)[letters_[i]] > 0 ? '+' : '-';
    }
    return out;
}

bool GaussCode::operator==(const GaussCode& other) const {
    return letters_ == other.letters_ && ou_ == other.ou_ && sign_ == other.sign_;
}

namespace {

// Encoded token stream used for lexicographic comparison of representatives.
// Per position: relabeled letter, OU flag (O<U), sign of the letter (+<-).
std::vector<int> encode_rotation(const GaussCode& c, int start, bool rev) {
    int m = c.length();
    std::vector<int> relabel(c.crossings(), -1);
    int next = 0;
    std::vector<int> key;
    key.reserve(m * 3);
    for (int k = 0; k < m; k++) {
        int pos = rev ? ((start - k) % m + m) % m : (start + k) % m;
        int lab = c.letters()[pos];
        if (relabel[lab] < 0) relabel[lab] = next++;
        key.push_back(relabel[lab]);
        key.push_back(c.has_ou() ? (c.ou()[pos] == Strand::Over ? 0 : 1) : 0);
        key.push_back(c.has_sign() ? (c.sign()[lab] > 0 ? 0 : 1) : 0);
    }
    return key;
}

GaussCode build_rotation(const GaussCode& c, int start, bool rev) {
    int m = c.length();
    std::vector<int> relabel(c.crossings(), -1);
    int next = 0;
    std::vector<int> letters;
    std::optional<std::vector<Strand>> ou;
    if (c.has_ou()) ou.emplace();
    std::vector<int> order;  // old label per new label
    for (int k = 0; k < m; k++) {
        int pos = rev ? ((start - k) % m + m) % m : (start + k) % m;
        int lab = c.letters()[pos];
        if (relabel[lab] < 0) {
            relabel[lab] = next++;
            order.push_back(lab);
        }
        letters.push_back(relabel[lab]);
        if (ou) ou->push_back(c.ou()[pos]);
    }
    std::optional<std::vector<int>> sign;
    if (c.has_sign()) {
        sign.emplace();
        for (int old : order) sign->push_back(c.sign()[old]);
    }
    return GaussCode(std::move(letters), std::move(ou), std::move(sign));
}

} // namespace

GaussCode canonicalize(const GaussCode& code) {
    if (code.empty()) return code;
    int m = code.length();
    int best_start = 0;
    bool best_rev = false;
    std::vector<int> best = encode_rotation(code, 0, false);
    for (int rev = 0; rev < 2; rev++) {
        for (int start = 0; start < m; start++) {
            if (rev == 0 && start == 0) continue;
            auto key = encode_rotation(code, start, rev != 0);
            if (key < best) {
                best = std::move(key);
                best_start = start;
                best_rev = rev != 0;
            }
        }
    }
    return build_rotation(code, best_start, best_rev);
}

GaussCode mirror(const GaussCode& code) {
    if (!code.has_ou() && !code.has_sign())
        throw Error(ErrorKind::Undecorated, "plain word has no mirror distinction");
    std::optional<std::vector<Strand>> ou;
    if (code.has_ou()) {
        ou.emplace();
        for (Strand s : code.ou())
            ou->push_back(s == Strand::Over ? Strand::Under : Strand::Over);
    }
    std::optional<std::vector<int>> sign;
    if (code.has_sign()) {
        sign.emplace();
        for (int s : code.sign()) sign->push_back(-s);
    }
    return GaussCode(code.letters(), std::move(ou), std::move(sign));
}

GaussCode reverse(const GaussCode& code) {
    std::vector<int> letters(code.letters().rbegin(), code.letters().rend());
    std::optional<std::vector<Strand>> ou;
    if (code.has_ou()) ou.emplace(code.ou().rbegin(), code.ou().rend());
    std::optional<std::vector<int>> sign;
    if (code.has_sign()) sign = code.sign();
    GaussCode out(std::move(letters), std::move(ou), std::move(sign));
    out.display_ = code.display_;
    return out;
}

GaussCode assign_alternating(const GaussCode& code) {
    for (int x = 0; x < code.crossings(); x++)
        if (code.gap(x) % 2 == 0)
            throw Error(ErrorKind::OddGap,
                        "label " + std::to_string(x + 1) + " has even gap " + std::to_string(code.gap(x)));
    std::vector<Strand> ou;
    for (int i = 0; i < code.length(); i++)
        ou.push_back(i % 2 == 0 ? Strand::Over : Strand::Under);
    std::optional<std::vector<int>> sign;
    if (code.has_sign()) sign = code.sign();
    return GaussCode(code.letters(), std::move(ou), std::move(sign));
}

} // namespace knot
