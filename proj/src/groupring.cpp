#include "blanchfield/groupring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace blanchfield {

namespace {
[[noreturn]] void fail(const std::string& m) { throw std::runtime_error(m); }

int mod_order(int e, int order) {
    if (order <= 0) return e;
    int r = e % order;
    return r < 0 ? r + order : r;
}
}  // namespace

GroupSpec GroupSpec::free_abelian(int n, const std::string& stem) {
    GroupSpec s;
    for (int i = 0; i < n; ++i)
        s.names.push_back(n == 1 ? stem : stem + std::to_string(i + 1));
    s.orders.assign(n, 0);
    return s;
}

GroupSpec GroupSpec::cyclic(int p, const std::string& name) {
    GroupSpec s;
    s.names = {name};
    s.orders = {p};
    return s;
}

void GroupWord::reduce() {
    std::vector<std::pair<int, int>> out;
    for (auto [g, e] : letters_) {
        if (e == 0) continue;
        if (!out.empty() && out.back().first == g) {
            out.back().second += e;
            if (out.back().second == 0) out.pop_back();
        } else {
            out.emplace_back(g, e);
        }
    }
    letters_ = std::move(out);
}

GroupWord::GroupWord(std::vector<std::pair<int, int>> letters) : letters_(std::move(letters)) {
    reduce();
}

GroupWord GroupWord::generator(int g, int exp) { return GroupWord({{g, exp}}); }

GroupWord GroupWord::from_exponents(const std::vector<int>& exps) {
    std::vector<std::pair<int, int>> ls;
    for (int g = 0; g < (int)exps.size(); ++g)
        if (exps[g] != 0) ls.emplace_back(g, exps[g]);
    return GroupWord(std::move(ls));
}

GroupWord GroupWord::normalized(const GroupSpec& spec) const {
    if (!spec.abelian) {
        GroupWord w = *this;
        w.reduce();
        return w;
    }
    std::vector<int> exps(spec.ngens(), 0);
    for (auto [g, e] : letters_) {
        if (g < 0 || g >= spec.ngens()) fail("group word: unknown generator index");
        exps[g] += e;
    }
    for (int g = 0; g < spec.ngens(); ++g) exps[g] = mod_order(exps[g], spec.orders[g]);
    return from_exponents(exps);
}

GroupWord GroupWord::product(const GroupWord& o, const GroupSpec& spec) const {
    std::vector<std::pair<int, int>> ls = letters_;
    ls.insert(ls.end(), o.letters_.begin(), o.letters_.end());
    return GroupWord(std::move(ls)).normalized(spec);
}

GroupWord GroupWord::inverse() const {
    std::vector<std::pair<int, int>> ls;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        ls.emplace_back(it->first, -it->second);
    return GroupWord(std::move(ls));
}

std::vector<int> GroupWord::exponents(int ngens) const {
    std::vector<int> exps(ngens, 0);
    for (auto [g, e] : letters_) {
        if (g < 0 || g >= ngens) fail("group word: unknown generator index");
        exps[g] += e;
    }
    return exps;
}

std::string GroupWord::to_string(const GroupSpec& spec) const {
    if (letters_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto [g, e] : letters_) {
        if (!first) os << "*";
        os << spec.names.at(g);
        if (e != 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

// ----------------------------------------------------------------------

void GroupRingElement::add_term(const GroupWord& w, const Int& c) {
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GroupRingElement GroupRingElement::one(const GroupSpec& spec) {
    GroupRingElement e(spec);
    e.terms_.emplace(GroupWord::identity(), 1);
    return e;
}

GroupRingElement GroupRingElement::monomial(const GroupSpec& spec, const GroupWord& w, Int c) {
    GroupRingElement e(spec);
    if (c != 0) e.terms_.emplace(w.normalized(spec), std::move(c));
    return e;
}

bool GroupRingElement::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_identity() &&
           terms_.begin()->second == 1;
}

namespace {
const GroupSpec& join(const GroupRingElement& a, const GroupRingElement& b,
                      bool ta, bool tb) {
    if (ta && tb) {
        if (!(a.spec() == b.spec())) fail("group ring mismatch");
        return a.spec();
    }
    return ta ? a.spec() : b.spec();
}
}  // namespace

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
    if (!tagged_ && !o.tagged_) return GroupRingElement();
    GroupRingElement out(join(*this, o, tagged_, o.tagged_));
    out.terms_ = terms_;
    for (const auto& [w, c] : o.terms_) out.add_term(w, c);
    return out;
}

GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement out = *this;
    for (auto& [w, c] : out.terms_) c = -c;
    return out;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
    return *this + (-o);
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
    if (!tagged_ && !o.tagged_) return GroupRingElement();
    GroupRingElement out(join(*this, o, tagged_, o.tagged_));
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : o.terms_)
            out.add_term(wa.product(wb, out.spec_), ca * cb);
    return out;
}

bool GroupRingElement::operator==(const GroupRingElement& o) const {
    if (is_zero() && o.is_zero()) return true;
    return terms_ == o.terms_;
}

GroupRingElement conj(const GroupRingElement& a) {
    GroupRingElement out = a;
    out.terms_.clear();
    for (const auto& [w, c] : a.terms())
        out.add_term(w.inverse().normalized(a.spec()), c);
    return out;
}

Int GroupRingElement::augmentation() const {
    Int s = 0;
    for (const auto& [w, c] : terms_) s += c;
    return s;
}

std::string GroupRingElement::to_string() const {
    if (terms_.empty()) return "0";
    // print with exponents descending (single generator reads like a
    // Laurent polynomial)
    std::vector<std::pair<GroupWord, Int>> ordered(terms_.begin(), terms_.end());
    if (spec_.abelian) {
        std::stable_sort(ordered.begin(), ordered.end(),
                         [&](const auto& a, const auto& b) {
                             return a.first.exponents(spec_.ngens()) >
                                    b.first.exponents(spec_.ngens());
                         });
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : ordered) {
        Int v = c;
        if (first) {
            if (v < 0) { os << "-"; v = -v; }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        if (w.is_identity()) {
            os << v.str();
        } else {
            if (v != 1) os << v.str() << "*";
            os << w.to_string(spec_);
        }
        first = false;
    }
    return os.str();
}

GroupRingElement GroupRingElement::parse(const std::string& text, const GroupSpec& spec) {
    GroupRingElement out = GroupRingElement::zero(spec);
    size_t i = 0;
    auto skip = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
    auto read_int = [&]() -> Int {
        skip();
        size_t start = i;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
        size_t d = i;
        while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
        if (i == d) fail("group ring parse: expected integer in '" + text + "'");
        return Int(text.substr(start, i - start));
    };
    auto read_name = [&]() -> int {
        skip();
        size_t start = i;
        while (i < text.size() && (std::isalnum((unsigned char)text[i]) || text[i] == '_')) ++i;
        std::string name = text.substr(start, i - start);
        for (int g = 0; g < spec.ngens(); ++g)
            if (spec.names[g] == name) return g;
        fail("group ring parse: unknown generator '" + name + "'");
    };
    bool any = false;
    while (true) {
        skip();
        if (i >= text.size()) break;
        int sign = 1;
        if (text[i] == '+') { ++i; }
        else if (text[i] == '-') { sign = -1; ++i; }
        else if (any) fail("group ring parse: expected sign in '" + text + "'");
        skip();
        Int coeff = 1;
        if (i < text.size() && std::isdigit((unsigned char)text[i])) coeff = read_int();
        std::vector<std::pair<int, int>> letters;
        while (true) {
            skip();
            if (i < text.size() && text[i] == '*') { ++i; skip(); }
            if (i >= text.size() || !(std::isalpha((unsigned char)text[i]) || text[i] == '_'))
                break;
            int g = read_name();
            int e = 1;
            skip();
            if (i < text.size() && text[i] == '^') { ++i; e = (int)read_int(); }
            letters.emplace_back(g, e);
        }
        out = out + GroupRingElement::monomial(spec, GroupWord(std::move(letters)),
                                               coeff * sign);
        any = true;
    }
    return out;
}

}  // namespace blanchfield
