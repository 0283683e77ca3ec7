#include "blanchfield/io.hpp"

namespace blanchfield {

namespace {
[[noreturn]] void fail(const std::string& m) { throw std::runtime_error(m); }

Ring ring_from_name(const std::string& s) {
    if (s == "integers") return Ring::Integers;
    if (s == "rationals") return Ring::Rationals;
    if (s == "laurent") return Ring::Laurent;
    fail("unknown ring tag '" + s + "'");
}

json rmatrix_to_json(const Matrix<RingElement>& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix<RingElement> rmatrix_from_json(const json& j, Ring ring, int rows, int cols) {
    if (!j.is_array() || (int)j.size() != rows) fail("matrix: wrong row count");
    Matrix<RingElement> m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if ((int)j[i].size() != cols) fail("matrix: wrong column count");
        for (int c = 0; c < cols; ++c)
            m(i, c) = RingElement::parse(j[i][c].get<std::string>(), ring);
    }
    return m;
}

json gmatrix_to_json(const Matrix<GroupRingElement>& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix<GroupRingElement> gmatrix_from_json(const json& j, const GroupSpec& spec, int rows,
                                           int cols) {
    if (!j.is_array() || (int)j.size() != rows) fail("matrix: wrong row count");
    Matrix<GroupRingElement> m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if ((int)j[i].size() != cols) fail("matrix: wrong column count");
        for (int c = 0; c < cols; ++c)
            m(i, c) = GroupRingElement::parse(j[i][c].get<std::string>(), spec);
    }
    return m;
}

template <class T, class MatToJson>
json complex_body_to_json(const ChainComplex<T>& C, MatToJson&& mj) {
    json degrees = json::object(), boundaries = json::object();
    for (const auto& [d, r] : C.ranks()) degrees[std::to_string(d)] = r;
    for (int r = C.lo(); r <= C.hi(); ++r)
        if (C.rank(r) && C.rank(r - 1) && !C.bd(r).is_zero())
            boundaries[std::to_string(r)] = mj(C.bd(r));
    return json{{"degrees", degrees}, {"boundaries", boundaries}};
}

}  // namespace

json ring_complex_to_json(const ChainComplex<RingElement>& C, Ring ring) {
    json j = complex_body_to_json(C, [](const Matrix<RingElement>& m) {
        return rmatrix_to_json(m);
    });
    j["ring"] = ring_name(ring);
    return j;
}

ChainComplex<RingElement> ring_complex_from_json(const json& j) {
    Ring ring = ring_from_name(j.at("ring").get<std::string>());
    ChainComplex<RingElement> C;
    for (auto& [k, v] : j.at("degrees").items()) C.set_rank(std::stoi(k), v.get<int>());
    if (j.contains("boundaries"))
        for (auto& [k, v] : j.at("boundaries").items()) {
            int r = std::stoi(k);
            C.set_boundary(r, rmatrix_from_json(v, ring, C.rank(r - 1), C.rank(r)));
        }
    DegreeReport rep = C.validate();
    if (!rep.ok)
        fail("complex: " + rep.what + " at degree " + std::to_string(rep.degree));
    return C;
}

json group_spec_to_json(const GroupSpec& spec) {
    return json{{"generators", spec.names}, {"orders", spec.orders},
                {"abelian", spec.abelian}};
}

GroupSpec group_spec_from_json(const json& j) {
    GroupSpec s;
    s.names = j.at("generators").get<std::vector<std::string>>();
    s.orders = j.at("orders").get<std::vector<int>>();
    s.abelian = j.value("abelian", true);
    if (s.names.size() != s.orders.size()) fail("group: generators/orders mismatch");
    return s;
}

json group_complex_to_json(const ChainComplex<GroupRingElement>& C, const GroupSpec& spec) {
    json j = complex_body_to_json(C, [](const Matrix<GroupRingElement>& m) {
        return gmatrix_to_json(m);
    });
    j["group"] = group_spec_to_json(spec);
    return j;
}

ChainComplex<GroupRingElement> group_complex_from_json(const json& j, const GroupSpec& spec) {
    ChainComplex<GroupRingElement> C;
    for (auto& [k, v] : j.at("degrees").items()) C.set_rank(std::stoi(k), v.get<int>());
    if (j.contains("boundaries"))
        for (auto& [k, v] : j.at("boundaries").items()) {
            int r = std::stoi(k);
            C.set_boundary(r, gmatrix_from_json(v, spec, C.rank(r - 1), C.rank(r)));
        }
    DegreeReport rep = C.validate();
    if (!rep.ok)
        fail("complex: " + rep.what + " at degree " + std::to_string(rep.degree));
    return C;
}

json representation_to_json(const Representation& rep) {
    json gens = json::array();
    for (int g = 0; g < rep.group.ngens(); ++g)
        gens.push_back(json{{"name", rep.group.names[g]},
                            {"matrix", rmatrix_to_json(rep.gens[g])},
                            {"inverse", rmatrix_to_json(rep.gen_invs[g])}});
    return json{{"ring", ring_name(rep.ring)},
                {"dim", rep.dim},
                {"group", group_spec_to_json(rep.group)},
                {"generators", gens},
                {"theta", rmatrix_to_json(rep.theta)}};
}

Representation representation_from_json(const json& j) {
    Representation rep;
    rep.ring = ring_from_name(j.at("ring").get<std::string>());
    rep.dim = j.at("dim").get<int>();
    rep.group = group_spec_from_json(j.at("group"));
    for (const auto& g : j.at("generators")) {
        rep.gens.push_back(rmatrix_from_json(g.at("matrix"), rep.ring, rep.dim, rep.dim));
        rep.gen_invs.push_back(
            rmatrix_from_json(g.at("inverse"), rep.ring, rep.dim, rep.dim));
    }
    rep.theta = rmatrix_from_json(j.at("theta"), rep.ring, rep.dim, rep.dim);
    rep.validate();
    return rep;
}

namespace {

json structure_to_json(const SymStructure<GroupRingElement>& st) {
    json out = json::object();
    for (const auto& [key, m] : st.comp) {
        auto [s, r] = key;
        out[std::to_string(s)][std::to_string(r)] = gmatrix_to_json(m);
    }
    return out;
}

SymStructure<GroupRingElement> structure_from_json(const json& j, const GroupSpec& spec,
                                                   const ChainComplex<GroupRingElement>& C,
                                                   int dim) {
    SymStructure<GroupRingElement> st;
    for (auto& [sk, rs] : j.items()) {
        int s = std::stoi(sk);
        for (auto& [rk, m] : rs.items()) {
            int r = std::stoi(rk);
            st.set(s, r, gmatrix_from_json(m, spec, C.rank(r), C.rank(dim + s - r)));
        }
    }
    return st;
}

json map_to_json(const ChainMap<GroupRingElement>& f) {
    json out = json::object();
    for (const auto& [r, m] : f.comp)
        if (!m.is_zero()) out[std::to_string(r)] = gmatrix_to_json(m);
    return out;
}

ChainMap<GroupRingElement> map_from_json(const json& j, const GroupSpec& spec,
                                         const ChainComplex<GroupRingElement>& src,
                                         const ChainComplex<GroupRingElement>& dst,
                                         bool transpose_shape = false) {
    ChainMap<GroupRingElement> f;
    for (auto& [rk, m] : j.items()) {
        int r = std::stoi(rk);
        int rows = transpose_shape ? src.rank(r) : dst.rank(r);
        int cols = transpose_shape ? dst.rank(r) : src.rank(r);
        f.comp[r] = gmatrix_from_json(m, spec, rows, cols);
    }
    return f;
}

json homotopy_to_json(const ChainHomotopy<GroupRingElement>& k) {
    json out = json::object();
    for (const auto& [r, m] : k.comp)
        if (!m.is_zero()) out[std::to_string(r)] = gmatrix_to_json(m);
    return out;
}

}  // namespace

json triad_to_json(const SymTriad<GroupRingElement>& T, const GroupSpec& spec) {
    json j;
    j["group"] = group_spec_to_json(spec);
    j["dimension"] = T.n + 2;
    j["complexes"] = json{{"D", group_complex_to_json(T.D, spec)},
                          {"A", group_complex_to_json(T.A, spec)},
                          {"B", group_complex_to_json(T.B, spec)},
                          {"C", group_complex_to_json(T.C, spec)}};
    auto inj = [&](const SplitInjection<GroupRingElement>& i) {
        return json{{"matrix", map_to_json(i.incl)}, {"splitting", map_to_json(i.split)}};
    };
    j["maps"] = json{{"jA", inj(T.jA)}, {"jB", inj(T.jB)},
                     {"iA", inj(T.iA)}, {"iB", inj(T.iB)}};
    j["structures"] = json{{"chi", structure_to_json(T.chi)},
                           {"phiA", structure_to_json(T.phiA)},
                           {"phiB", structure_to_json(T.phiB)},
                           {"Phi", structure_to_json(T.Phi)}};
    if (T.sigma) {
        j["sigma"] = json{{"matrix", map_to_json(*T.sigma)}};
        if (T.sigma_homotopy) j["sigma"]["homotopy"] = homotopy_to_json(*T.sigma_homotopy);
    }
    return j;
}

SymTriad<GroupRingElement> triad_from_json(const json& j, GroupSpec* spec_out) {
    GroupSpec spec = group_spec_from_json(j.at("group"));
    if (spec_out) *spec_out = spec;
    SymTriad<GroupRingElement> T;
    int dim = j.value("dimension", 3);
    T.n = dim - 2;
    const json& cx = j.at("complexes");
    T.D = group_complex_from_json(cx.at("D"), spec);
    T.A = group_complex_from_json(cx.at("A"), spec);
    T.B = group_complex_from_json(cx.at("B"), spec);
    T.C = group_complex_from_json(cx.at("C"), spec);
    const json& maps = j.at("maps");
    auto inj = [&](const json& m, const ChainComplex<GroupRingElement>& src,
                   const ChainComplex<GroupRingElement>& dst) {
        SplitInjection<GroupRingElement> out;
        out.incl = map_from_json(m.at("matrix"), spec, src, dst);
        out.split = map_from_json(m.at("splitting"), spec, dst, src);
        return out;
    };
    T.jA = inj(maps.at("jA"), T.D, T.A);
    T.jB = inj(maps.at("jB"), T.D, T.B);
    T.iA = inj(maps.at("iA"), T.A, T.C);
    T.iB = inj(maps.at("iB"), T.B, T.C);
    const json& st = j.at("structures");
    T.chi = structure_from_json(st.at("chi"), spec, T.D, T.n);
    T.phiA = structure_from_json(st.at("phiA"), spec, T.A, T.n + 1);
    T.phiB = structure_from_json(st.at("phiB"), spec, T.B, T.n + 1);
    T.Phi = structure_from_json(st.at("Phi"), spec, T.C, T.n + 2);
    if (j.contains("sigma")) {
        // sigma acts between the quotient complexes; reconstruct their shapes
        QuotientData<GroupRingElement> qa = quotient_complex(T.A, T.C, T.iA);
        QuotientData<GroupRingElement> qb = quotient_complex(T.B, T.C, T.iB);
        T.sigma = map_from_json(j.at("sigma").at("matrix"), spec, qb.Q, qa.Q);
        if (j.at("sigma").contains("homotopy")) {
            ChainHomotopy<GroupRingElement> k;
            for (auto& [rk, m] : j.at("sigma").at("homotopy").items()) {
                int r = std::stoi(rk);
                k.comp[r] = gmatrix_from_json(m, spec, qa.Q.rank(r + 1), T.C.rank(r));
            }
            T.sigma_homotopy = std::move(k);
        }
    }
    return T;
}

json pairing_matrix_to_json(const PairingMatrix& m) {
    json gens_a = json::array(), gens_b = json::array(), anns_r = json::array(),
         anns_c = json::array();
    for (const auto& a : m.row_annihilators) anns_r.push_back(a.to_string());
    for (const auto& a : m.col_annihilators) anns_c.push_back(a.to_string());
    for (int g = 0; g < m.row_generators.cols(); ++g) {
        json v = json::array();
        for (int i = 0; i < m.row_generators.rows(); ++i)
            v.push_back(m.row_generators(i, g).to_string());
        gens_b.push_back(std::move(v));
    }
    for (int g = 0; g < m.col_generators.cols(); ++g) {
        json v = json::array();
        for (int i = 0; i < m.col_generators.rows(); ++i)
            v.push_back(m.col_generators(i, g).to_string());
        gens_a.push_back(std::move(v));
    }
    json values = json::array();
    for (const auto& row : m.values) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.to_string());
        values.push_back(std::move(r));
    }
    return json{{"side", m.side == PairingSide::Cohomology ? "cohomology" : "homology"},
                {"ring", ring_name(m.ring)},
                {"generators_B", gens_b},
                {"generators_A", gens_a},
                {"annihilators_rows", anns_r},
                {"annihilators_cols", anns_c},
                {"matrix", values}};
}

json schemas() {
    json s;
    s["complex"] = {
        {"ring", "integers | rationals | laurent"},
        {"degrees", "object: degree -> rank"},
        {"boundaries", "object: degree r -> row-major matrix C_r -> C_{r-1}"}};
    s["group"] = {{"generators", "array of generator names"},
                  {"orders", "array of ints, 0 = infinite order"},
                  {"abelian", "bool (default true)"}};
    s["representation"] = {
        {"ring", "coefficient ring tag"},
        {"dim", "dimension d of V = R^d"},
        {"group", "group object"},
        {"generators", "array of {name, matrix, inverse} with d x d entries"},
        {"theta", "d x d inner product matrix, conj-symmetric, invertible"}};
    s["triad"] = {
        {"group", "group object"},
        {"dimension", "3"},
        {"complexes", "{D, A, B, C}: group-ring complexes"},
        {"maps", "{jA, jB, iA, iB}: {matrix: degree->matrix, splitting: degree->matrix}"},
        {"structures",
         "{chi, phiA, phiB, Phi}: s -> degree r -> matrix C^{dim+s-r} -> C_r"},
        {"sigma", "optional {matrix: degree->matrix (C/B -> C/A), homotopy: degree->matrix}"}};
    s["pairing"] = {{"generators_A/B", "cocycle coordinates of the torsion generators"},
                    {"annihilators_rows/cols", "smith invariant factors"},
                    {"matrix", "TorsionValue entries, row-major"},
                    {"checks", "verdicts when requested"}};
    s["basis-convention"] =
        "V ox C uses blocks per chain generator with the V-index varying fastest";
    return s;
}

}  // namespace blanchfield
