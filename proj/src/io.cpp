#include "qgw/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

namespace qgw {

namespace {

int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::logic_error&) {
        throw SpecError("expected an integer for " + what + ", got '" + s + "'");
    }
}

double parse_double(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::logic_error&) {
        throw SpecError("expected a number for " + what + ", got '" + s + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

// "key=value,key=value" into an ordered map; rejects duplicates.
std::map<std::string, std::string> parse_pairs(const std::string& body) {
    std::map<std::string, std::string> out;
    if (body.empty()) return out;
    for (const std::string& item : split(body, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw SpecError("expected key=value, got '" + item + "'");
        if (!out.emplace(item.substr(0, eq), item.substr(eq + 1)).second)
            throw SpecError("duplicate key '" + item.substr(0, eq) + "'");
    }
    return out;
}

std::pair<std::string, std::string> head_tail(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) return {spec, ""};
    return {spec.substr(0, colon), spec.substr(colon + 1)};
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
    throw ValidationError("expected a number or a [re, im] pair");
}

json sparse_json(const Mat& m) {
    json out = json::array();
    const auto cols = sparse_columns(m);
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [row, v] : cols[c]) out.push_back({row, static_cast<int>(c), v.real(), v.imag()});
    return out;
}

Mat sparse_from_json(const json& j, int rows, int cols, const std::string& what) {
    Mat m = Mat::Zero(rows, cols);
    for (const json& t : j) {
        if (!t.is_array() || t.size() != 4) throw ValidationError(what + ": triplets must be [target, source, re, im]");
        const int r = t[0].get<int>(), c = t[1].get<int>();
        if (r < 0 || r >= rows || c < 0 || c >= cols) throw StructuralError(what + ": index out of range");
        m(r, c) = cplx(t[2].get<double>(), t[3].get<double>());
    }
    return m;
}

json element_json(const AlgebraElement& a) {
    json blocks = json::array();
    for (const Mat& b : a.blocks()) {
        json rows = json::array();
        for (int i = 0; i < b.rows(); ++i) {
            json row = json::array();
            for (int j = 0; j < b.cols(); ++j) row.push_back(complex_json(b(i, j)));
            rows.push_back(row);
        }
        blocks.push_back(rows);
    }
    return blocks;
}

AlgebraElement element_from_json(const json& j, const BlockShape& shape) {
    if (!j.is_array() || static_cast<int>(j.size()) != shape.num_blocks())
        throw StructuralError("irrep element: expected one matrix per block");
    std::vector<Mat> blocks;
    for (int b = 0; b < shape.num_blocks(); ++b) {
        const int n = shape.block_dim(b);
        const json& rows = j[b];
        if (!rows.is_array() || static_cast<int>(rows.size()) != n) throw StructuralError("irrep element: wrong block size");
        Mat m(n, n);
        for (int r = 0; r < n; ++r) {
            if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != n)
                throw StructuralError("irrep element: wrong block size");
            for (int c = 0; c < n; ++c) m(r, c) = complex_from_json(rows[r][c]);
        }
        blocks.push_back(std::move(m));
    }
    return AlgebraElement(shape, std::move(blocks));
}

CayleyTable named_group(const std::string& spec) {
    const auto [head, tail] = head_tail(spec);
    if (head == "cyclic") return cyclic_group(parse_int(tail, "cyclic order"));
    if (head == "cube") return power_of_z2(parse_int(tail, "cube dimension"));
    if (head == "sym") return symmetric_group(parse_int(tail, "symmetric degree"));
    if (head == "dihedral") return dihedral_group(parse_int(tail, "dihedral n"));
    if (head == "quaternion" && tail.empty()) return quaternion_group();
    if (head == "cayley") return cayley_from_json(read_json_file(tail));
    throw SpecError("unknown group '" + spec + "'");
}

Functional kp_preset(const std::string& name) {
    KpParams p;
    if (name == "e2") {
        p.mu = {0, 1, 0, 0, 0};
    } else if (name == "example1") {
        p.mu = {0, 0.25, 0.25, 0.25, 0.25};
    } else if (name == "example2") {
        p.mu = {0, 0, 0.25, 0.25, 0.5};
        p.x = 1.0;
    } else if (name == "pal") {
        p.mu = {0.25, 0, 0, 0.25, 0.5};
        p.z = 1.0;
    } else {
        throw SpecError("unknown KP preset '" + name + "'");
    }
    return kp_state(p);
}

void require_family(const ResolvedGroup& g, Family f, const std::string& what) {
    if (g.family != f) throw SpecError(what + " does not apply to group '" + g.spec + "'");
}

Functional simple_walk(const ResolvedGroup& g) {
    switch (g.family) {
    case Family::zn: return zn_simple_state(g.quantum_group());
    case Family::cube: return cube_walk_state(g.quantum_group(), g.order);
    case Family::sekine: return sekine_walk_state(g.order);
    case Family::function_algebra:
        if (g.cayley && g.cayley->is_abelian() && g.cayley->order >= 2 && g.cayley->identity == 0) {
            // ½(δ¹ + δ⁻¹) for the element labelled 1, matching the cyclic case.
            Vec c = Vec::Zero(g.cayley->order);
            c(1) += 0.5;
            c(g.cayley->inverse[1]) += 0.5;
            return Functional(g.quantum_group().shape, c);
        }
        break;
    case Family::group_algebra:
        if (g.symmetric_group) return g.group_algebra->functional_from_values(dual_sn_values(g.order));
        break;
    default: break;
    }
    throw SpecError("no simple walk is defined for '" + g.spec + "'");
}

} // namespace

const QuantumGroup& ResolvedGroup::quantum_group() const {
    if (!group) throw SpecError("'" + spec + "' is not a quantum group");
    return *group;
}

CayleyTable resolve_cayley(const std::string& spec) { return named_group(spec); }

ResolvedGroup resolve_group(const std::string& spec) {
    ResolvedGroup g;
    g.spec = spec;
    const auto [head, tail] = head_tail(spec);
    if (head == "kp" && tail.empty()) {
        g.family = Family::kp;
        KacPaljutkin kp = kac_paljutkin();
        g.group = std::move(kp.group);
        g.irreps = std::move(kp.irreps);
    } else if (head == "sekine") {
        g.family = Family::sekine;
        g.order = parse_int(tail, "sekine order");
        if (g.order < 1) throw SpecError("sekine order must be positive");
        g.group = sekine(g.order);
        if (g.order % 2 == 1 && g.order >= 3) g.irreps = sekine_irreps(g.order);
        else g.irreps_missing = "Sekine irreps are implemented for odd n >= 3 only";
    } else if (head == "zn" || head == "cube") {
        g.family = head == "zn" ? Family::zn : Family::cube;
        g.order = parse_int(tail, head + " parameter");
        if (g.order < 1) throw SpecError(head + " parameter must be positive");
        g.cayley = head == "zn" ? cyclic_group(g.order) : power_of_z2(g.order);
        g.group = function_algebra(*g.cayley);
        g.irreps = classical_irreps(*g.group, *g.cayley);
    } else if (head == "f") {
        g.family = Family::function_algebra;
        g.cayley = named_group(tail);
        g.group = function_algebra(*g.cayley);
        if (g.cayley->is_abelian()) g.irreps = classical_irreps(*g.group, *g.cayley);
        else g.irreps_missing = "irreps of a nonabelian F(G) must be supplied with --irreps";
    } else if (head == "dual") {
        g.family = Family::group_algebra;
        g.cayley = named_group(tail);
        g.symmetric_group = head_tail(tail).first == "sym";
        if (g.symmetric_group) g.order = parse_int(head_tail(tail).second, "symmetric degree");
        g.group_algebra = group_algebra(*g.cayley);
        g.group = g.group_algebra->group;
        g.irreps = g.group_algebra->irreps();
    } else if (head == "sweedler" && tail.empty()) {
        g.family = Family::sweedler;
        g.descriptor = sweedler();
        g.irreps_missing = "Sweedler's algebra is not a quantum group";
        return g;
    } else if (head == "file") {
        g.family = Family::file;
        LoadedDescriptor d = descriptor_from_json(read_json_file(tail));
        g.group = std::move(d.group);
        g.irreps = std::move(d.irreps);
        if (!g.irreps) g.irreps_missing = "the descriptor carries no irreps; pass --irreps";
    } else {
        throw SpecError("unknown group spec '" + spec + "'");
    }
    g.descriptor = to_descriptor(*g.group);
    return g;
}

IrrepTable resolve_irreps(const ResolvedGroup& g, const std::optional<std::string>& irreps_path) {
    const QuantumGroup& qg = g.quantum_group();
    if (irreps_path) {
        const json j = read_json_file(*irreps_path);
        IrrepTable t = irreps_from_json(j.is_object() && j.contains("irreps") ? j["irreps"] : j, qg.shape);
        validate_irreps(qg, t);
        return t;
    }
    if (g.family == Family::sekine && !g.irreps) return sekine_irreps(g.order);  // throws UnsupportedError
    if (!g.irreps) throw UnsupportedError(g.irreps_missing);
    return *g.irreps;
}

Functional resolve_state(const std::string& spec, const ResolvedGroup& g, std::uint64_t seed) {
    const QuantumGroup& qg = g.quantum_group();
    const auto [head, tail] = head_tail(spec);
    if (head == "preset") {
        if (tail == "sekine-walk") {
            require_family(g, Family::sekine, "preset:sekine-walk");
            return sekine_walk_state(g.order);
        }
        if (tail == "perm") {
            if (!g.symmetric_group) throw SpecError("preset:perm needs dual:sym:N");
            return g.group_algebra->functional_from_values(dual_sn_values(g.order));
        }
        require_family(g, Family::kp, "preset:" + tail);
        return kp_preset(tail);
    }
    if (head == "simple" && tail.empty()) return simple_walk(g);
    if (head == "haar" && tail.empty()) return haar_state(qg);
    if (head == "counit" && tail.empty()) return qg.counit;
    if (head == "random" && tail.empty()) {
        std::mt19937_64 rng(seed);
        return random_state(qg, rng);
    }
    if (head == "kp") {
        require_family(g, Family::kp, "a kp: state");
        KpParams p;
        for (const auto& [key, value] : parse_pairs(tail)) {
            if (key == "mu") {
                const auto parts = split(value, '/');
                if (parts.size() != 5) throw SpecError("mu needs five weights separated by '/'");
                for (int i = 0; i < 5; ++i) p.mu[i] = parse_double(parts[i], "mu");
            } else if (key == "x") {
                p.x = parse_double(value, key);
            } else if (key == "y") {
                p.y = parse_double(value, key);
            } else if (key == "z") {
                p.z = parse_double(value, key);
            } else {
                throw SpecError("unknown kp state key '" + key + "'");
            }
        }
        return kp_state(p);
    }
    if (head == "sekine") {
        require_family(g, Family::sekine, "a sekine: state");
        const int n = g.order;
        std::vector<double> x(static_cast<std::size_t>(n) * n, 0.0);
        Mat a = Mat::Zero(n, n);
        auto pair_index = [&](const std::string& s, const std::string& key) {
            const auto parts = split(s, '_');
            if (parts.size() != 2) throw SpecError("expected " + key + "<i>_<j>");
            return std::pair{parse_int(parts[0], key), parse_int(parts[1], key)};
        };
        for (const auto& [key, value] : parse_pairs(tail)) {
            const double v = parse_double(value, key);
            if (key.rfind("Ai", 0) == 0 || key.rfind("A", 0) == 0) {
                const bool imag = key.rfind("Ai", 0) == 0;
                const auto [p, q] = pair_index(key.substr(imag ? 2 : 1), key);
                if (p < 1 || p > n || q < 1 || q > n) throw SpecError("matrix indices run over 1..n");
                a(p - 1, q - 1) += imag ? cplx(0.0, v) : cplx(v, 0.0);
            } else if (key.rfind("x", 0) == 0) {
                const auto [i, j] = pair_index(key.substr(1), key);
                x[(((i % n) + n) % n) * n + ((j % n) + n) % n] = v;
            } else {
                throw SpecError("unknown sekine state key '" + key + "'");
            }
        }
        return sekine_state(n, x, a);
    }
    if (head == "classical") {
        for (int b = 0; b < qg.shape.num_blocks(); ++b)
            if (qg.shape.block_dim(b) != 1) throw SpecError("classical: states need a commutative algebra");
        Vec c = Vec::Zero(qg.dim());
        for (const auto& [key, value] : parse_pairs(tail)) {
            const int i = parse_int(key, "point index");
            if (i < 0 || i >= qg.dim()) throw SpecError("point index out of range: " + key);
            c(i) = parse_double(value, "point mass");
        }
        return Functional(qg.shape, c);
    }
    throw SpecError("unknown state spec '" + spec + "'");
}

// ---------------------------------------------------------------------------
// JSON

json descriptor_to_json(const QuantumGroup& qg, const std::optional<IrrepTable>& irreps) {
    json j;
    j["label"] = qg.label;
    j["blocks"] = qg.shape.dims();
    j["haar_weights"] = qg.haar.weights();
    j["delta"] = sparse_json(qg.delta.matrix());
    json counit = json::array();
    for (int i = 0; i < qg.dim(); ++i) counit.push_back(complex_json(qg.counit.coeffs()(i)));
    j["counit"] = counit;
    j["antipode"] = sparse_json(qg.antipode.matrix());
    if (irreps) j["irreps"] = irreps_to_json(*irreps);
    return j;
}

LoadedDescriptor descriptor_from_json(const json& j) {
    try {
        QuantumGroup qg;
        qg.label = j.value("label", std::string("custom"));
        qg.shape = BlockShape(j.at("blocks").get<std::vector<int>>());
        const int n = qg.dim();
        qg.haar = HaarWeights(qg.shape, j.at("haar_weights").get<std::vector<double>>());
        qg.delta = LinearMap(sparse_from_json(j.at("delta"), n * n, n, "delta"));
        qg.antipode = LinearMap(sparse_from_json(j.at("antipode"), n, n, "antipode"));
        const json& c = j.at("counit");
        if (!c.is_array() || static_cast<int>(c.size()) != n) throw StructuralError("counit: expected one entry per basis element");
        Vec eps(n);
        for (int i = 0; i < n; ++i) eps(i) = complex_from_json(c[i]);
        qg.counit = Functional(qg.shape, eps);
        qg.check_structure();
        LoadedDescriptor out{std::move(qg), std::nullopt};
        if (j.contains("irreps")) out.irreps = irreps_from_json(j["irreps"], out.group.shape);
        return out;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("descriptor JSON: ") + e.what());
    }
}

json irreps_to_json(const IrrepTable& t) {
    json out = json::array();
    for (const Irrep& r : t.irreps) {
        json elements = json::array();
        for (const AlgebraElement& e : r.elements) elements.push_back(element_json(e));
        out.push_back({{"name", r.name}, {"dim", r.dim}, {"elements", elements}});
    }
    return out;
}

IrrepTable irreps_from_json(const json& j, const BlockShape& shape) {
    try {
        IrrepTable t;
        for (const json& r : j) {
            Irrep irrep;
            irrep.dim = r.at("dim").get<int>();
            irrep.name = r.value("name", "irrep" + std::to_string(t.irreps.size()));
            const json& el = r.at("elements");
            if (irrep.dim < 1 || static_cast<int>(el.size()) != irrep.dim * irrep.dim)
                throw StructuralError("irrep '" + irrep.name + "': expected dim² elements");
            for (const json& e : el) irrep.elements.push_back(element_from_json(e, shape));
            t.irreps.push_back(std::move(irrep));
        }
        return t;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("irrep JSON: ") + e.what());
    }
}

json cayley_to_json(const CayleyTable& g) {
    json table = json::array();
    for (int a = 0; a < g.order; ++a) {
        json row = json::array();
        for (int b = 0; b < g.order; ++b) row.push_back(g.mul(a, b));
        table.push_back(row);
    }
    return {{"order", g.order}, {"table", table}, {"labels", g.labels}};
}

CayleyTable cayley_from_json(const json& j) {
    try {
        const int order = j.at("order").get<int>();
        const json& table = j.at("table");
        if (order < 1 || static_cast<int>(table.size()) != order) throw ValidationError("Cayley table: expected order rows");
        std::vector<int> product;
        for (const json& row : table) {
            if (static_cast<int>(row.size()) != order) throw ValidationError("Cayley table: expected order columns");
            for (const json& v : row) product.push_back(v.get<int>());
        }
        std::vector<std::string> labels;
        if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
        return CayleyTable::from_product(order, std::move(product), std::move(labels));
    } catch (const json::exception& e) {
        throw ValidationError(std::string("Cayley JSON: ") + e.what());
    }
}

json report_to_json(const AxiomReport& r) {
    json res = json::object();
    for (const auto& [name, v] : r.residuals()) res[name] = v;
    return {{"residuals", res},
            {"worst", r.worst()},
            {"commutative", r.commutative},
            {"cocommutative", r.cocommutative},
            {"accepted", r.accepted()}};
}

json diagnostics_to_json(const IrrepDiagnostics& d) {
    return {{"corepresentation", d.corepresentation},
            {"counit", d.counit},
            {"unitarity", d.unitarity},
            {"character", d.character},
            {"orthogonality", d.orthogonality},
            {"sum_dim_squared", d.sum_dim_squared},
            {"complete", d.complete},
            {"trivial_first", d.trivial_first},
            {"accepted", d.accepted()}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
    if (!out) throw Error("write to '" + path + "' failed");
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_csv(const BoundSeries& s, std::ostream& out) {
    auto field = [](const std::string& f) {
        if (f.find_first_of(",\"\n") == std::string::npos) return f;
        std::string q = "\"";
        for (char c : f) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    };
    out << "k,tv,l2,sep,ubl,lbl";
    if (!s.rows.empty())
        for (const auto& [name, v] : s.rows.front().contributions) out << ',' << field(name);
    out << '\n';
    for (const BoundRow& r : s.rows) {
        out << r.k << ',' << (r.exact_tv ? format_double(*r.exact_tv) : std::string()) << ',' << format_double(r.l2) << ','
            << format_double(r.sep) << ',' << format_double(r.ubl) << ',' << format_double(r.lbl);
        for (const auto& [name, v] : r.contributions) out << ',' << format_double(v);
        out << '\n';
    }
}

} // namespace qgw
