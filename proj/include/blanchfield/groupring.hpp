#pragma once

// Words in group generators and integral group-ring elements.  Shipped
// groups are abelian (free abelian and cyclic factors, given by generator
// orders); free non-abelian words are carried but only multiplied formally.

#include "blanchfield/ring.hpp"

#include <map>
#include <string>
#include <vector>

namespace blanchfield {

// Group metadata: per-generator order (0 = infinite).  abelian selects the
// normal form: sorted exponent vectors with cyclic exponents reduced.
struct GroupSpec {
    std::vector<std::string> names;   // generator names, e.g. {"t"}
    std::vector<int> orders;          // same length; 0 = infinite order
    bool abelian = true;

    int ngens() const { return (int)names.size(); }
    bool operator==(const GroupSpec& o) const {
        return names == o.names && orders == o.orders && abelian == o.abelian;
    }
    static GroupSpec free_abelian(int n, const std::string& stem = "t");
    static GroupSpec cyclic(int p, const std::string& name = "g");
};

class GroupWord {
  public:
    GroupWord() = default;
    // freely reduced sequence of (generator, exponent)
    explicit GroupWord(std::vector<std::pair<int, int>> letters);
    static GroupWord identity() { return GroupWord(); }
    static GroupWord generator(int g, int exp = 1);
    // abelian normal form: exponent vector
    static GroupWord from_exponents(const std::vector<int>& exps);

    const std::vector<std::pair<int, int>>& letters() const { return letters_; }
    bool is_identity() const { return letters_.empty(); }

    GroupWord normalized(const GroupSpec& spec) const;
    GroupWord product(const GroupWord& o, const GroupSpec& spec) const;
    GroupWord inverse() const;
    std::vector<int> exponents(int ngens) const;  // abelian words only

    bool operator<(const GroupWord& o) const { return letters_ < o.letters_; }
    bool operator==(const GroupWord& o) const { return letters_ == o.letters_; }

    std::string to_string(const GroupSpec& spec) const;

  private:
    std::vector<std::pair<int, int>> letters_;
    void reduce();
};

class GroupRingElement {
  public:
    GroupRingElement() = default;
    explicit GroupRingElement(GroupSpec spec) : spec_(std::move(spec)), tagged_(true) {}

    static GroupRingElement zero(const GroupSpec& spec) { return GroupRingElement(spec); }
    static GroupRingElement one(const GroupSpec& spec);
    static GroupRingElement monomial(const GroupSpec& spec, const GroupWord& w, Int c = 1);

    const GroupSpec& spec() const { return spec_; }
    const std::map<GroupWord, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    GroupRingElement operator+(const GroupRingElement& o) const;
    GroupRingElement operator-(const GroupRingElement& o) const;
    GroupRingElement operator*(const GroupRingElement& o) const;
    GroupRingElement operator-() const;
    bool operator==(const GroupRingElement& o) const;
    bool operator!=(const GroupRingElement& o) const { return !(*this == o); }

    friend GroupRingElement conj(const GroupRingElement& a);  // g -> g^{-1}
    friend GroupRingElement gr_conj_impl(const GroupRingElement&);

    Int augmentation() const;

    std::string to_string() const;
    static GroupRingElement parse(const std::string& text, const GroupSpec& spec);

  private:
    GroupSpec spec_;
    bool tagged_ = false;   // default-constructed zero promotes on contact
    std::map<GroupWord, Int> terms_;
    void add_term(const GroupWord& w, const Int& c);
    friend class GroupRingBuilder;
};

GroupRingElement conj(const GroupRingElement& a);

}  // namespace blanchfield
