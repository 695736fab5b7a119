#pragma once
//
// Group and state specifications, the JSON file formats and CSV output used
// by the command-line runner.
//
// Group specs:
//   kp                   Kac–Paljutkin
//   sekine:N             Sekine algebra of order N
//   zn:N                 F(ℤ_N)
//   cube:N               F(ℤ₂^N)
//   f:G                  F(G)
//   dual:G               ℂG
//   sweedler             Sweedler's algebra (not a quantum group)
//   file:PATH            descriptor JSON
// where G is cyclic:N, cube:N, sym:N, dihedral:N, quaternion or cayley:PATH.
//
// State specs:
//   preset:e2|example1|example2|pal   KP walks
//   preset:sekine-walk                ¼(e^(0,1) + e^(1,0) + E¹¹ + E¹² + E²¹ + E²²)
//   preset:perm                       the permutation-representation state on ℂSₙ
//   simple                            natural walk of the family
//   random | haar | counit
//   kp:mu=a/b/c/d/e,x=..,y=..,z=..
//   sekine:x0_1=..,A1_2=..,Ai1_2=..   point weights x, density A (real and imaginary parts)
//   classical:IDX=W,...               point masses on a commutative algebra
//

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "qgw/bounds.hpp"
#include "qgw/catalog.hpp"

namespace qgw {

using json = nlohmann::json;

// A group or state spec that cannot be parsed or resolved.
class SpecError : public Error {
public:
    using Error::Error;
};

enum class Family { kp, sekine, zn, cube, function_algebra, group_algebra, sweedler, file };

struct ResolvedGroup {
    std::string spec;
    Family family = Family::file;
    int order = 0;                         // N for the parameterised families
    std::optional<QuantumGroup> group;     // absent for sweedler
    HopfDescriptor descriptor;
    std::optional<IrrepTable> irreps;      // the built-in or embedded table
    std::string irreps_missing;            // why irreps is empty
    std::optional<CayleyTable> cayley;
    std::optional<GroupAlgebra> group_algebra;
    bool symmetric_group = false;          // G was sym:N

    // Throws SpecError for descriptor-only algebras.
    const QuantumGroup& quantum_group() const;
};

ResolvedGroup resolve_group(const std::string& spec);
CayleyTable resolve_cayley(const std::string& spec);

// The built-in table, or the one in irreps_path when given.  Throws
// UnsupportedError when no table is available.
IrrepTable resolve_irreps(const ResolvedGroup& g, const std::optional<std::string>& irreps_path);

Functional resolve_state(const std::string& spec, const ResolvedGroup& g, std::uint64_t seed);

// Descriptor JSON.
json descriptor_to_json(const QuantumGroup& qg, const std::optional<IrrepTable>& irreps = std::nullopt);
struct LoadedDescriptor {
    QuantumGroup group;
    std::optional<IrrepTable> irreps;
};
LoadedDescriptor descriptor_from_json(const json& j);

json irreps_to_json(const IrrepTable& t);
IrrepTable irreps_from_json(const json& j, const BlockShape& shape);

json cayley_to_json(const CayleyTable& g);
CayleyTable cayley_from_json(const json& j);

json report_to_json(const AxiomReport& r);
json diagnostics_to_json(const IrrepDiagnostics& d);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// 17 significant digits.
std::string format_double(double x);

// k, tv, l2, sep, ubl, lbl, then one column per irrep contribution.
void write_csv(const BoundSeries& s, std::ostream& out);

} // namespace qgw
