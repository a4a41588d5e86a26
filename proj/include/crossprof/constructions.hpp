#pragma once

#include "crossprof/analytic.hpp"
#include "crossprof/geom.hpp"
#include "crossprof/profile.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crossprof {

enum class ConstructionKind { Convex, MaxE0, TwoArc, ThreeArc, EkLinear, E1Linear, MaxSk, NestedTriangles, Grid };

std::string kind_name(ConstructionKind k);
std::optional<ConstructionKind> kind_from_name(const std::string& s);

struct ConstructionSpec {
    ConstructionKind kind = ConstructionKind::Convex;
    long n = 0;
    std::optional<long> k;
    std::vector<long> arcs;
    Rational flatness = make_rational(1, 4);
    int max_refinements = 24;
    std::uint64_t seed = 1;
};

struct Claim {
    enum class Kind { None, ExactlyKCrossings, ExactlyOneCrossing, UncrossedEdges, AtMostKCrossings };
    Kind kind = Kind::None;
    long k = 0;

    bool admits(std::uint64_t count) const;
    std::string describe() const;
};

struct ConstructionMeta {
    long m = 0;
    long r = 0;
    long j = 0;
    long tiles = 0;
    int appendix_case = 0;  // 1..8, 0 when not applicable
    int block_case = 0;     // case used for the block itself (differs from appendix_case in case 5)
    long per_block = 0;     // designated edges per block
    std::size_t block_size = 0;
    Rational eps;
    int iterations = 0;
    std::vector<std::string> notes;
};

struct GeneratedDrawing {
    Drawing drawing;
    std::vector<EdgeId> designated;
    Claim claim;
    ConstructionMeta meta;
};

struct Diagnosis {
    EdgeId edge;
    std::string expected;
    std::uint64_t observed = 0;
    std::string message;
    std::string describe() const;
};

class ConstructionError : public std::runtime_error {
public:
    enum class Kind { InvalidParameters, BudgetExhausted };
    ConstructionError(Kind kind, const std::string& what, std::optional<Diagnosis> d = std::nullopt)
        : std::runtime_error(what), kind(kind), diagnosis(std::move(d)) {}
    Kind kind;
    std::optional<Diagnosis> diagnosis;
};

// Checks every designated edge against the claim with a fresh oracle call.
std::optional<Diagnosis> check_claim(const GeneratedDrawing& g);
std::optional<Diagnosis> check_claim(const GeneratedDrawing& g, const EdgeCrossCounts& counts);

using Certifier = std::function<std::optional<Diagnosis>(const GeneratedDrawing&)>;

// Builds with eps = flatness / 2^i for i = 0, 1, ... until certify passes.
GeneratedDrawing refine(const ConstructionSpec& spec, const Certifier& certify);
GeneratedDrawing refine(const ConstructionSpec& spec,
                        const std::function<GeneratedDrawing(const Rational& eps)>& build,
                        const Certifier& certify);

// Dispatches on spec.kind with its default certifier.
GeneratedDrawing generate(const ConstructionSpec& spec);

Drawing gen_convex(long n);
GeneratedDrawing gen_max_e0(long n);
GeneratedDrawing gen_two_arc(long a, long b, const Rational& flatness = make_rational(1, 10));
GeneratedDrawing gen_three_arc(long a, long b, long c, const Rational& flatness = make_rational(1, 10));
GeneratedDrawing gen_ek_linear(long n, long k, int max_refinements = 24);
GeneratedDrawing gen_e1_linear(long n, int max_refinements = 24);
GeneratedDrawing gen_maxSk(long n, long k, int max_refinements = 24);
GeneratedDrawing gen_nested_triangles(long n, long k, int max_refinements = 24);
Drawing gen_grid(long n, std::uint64_t seed = 1);

// Designated-count expected from the appendix case (Case 3 counts clamp at 0).
long ek_expected_designated(const ConstructionMeta& meta);

// Which appendix case gen_ek_linear uses for (n, k).
int ek_case_for(long n, long k);

}  // namespace crossprof
