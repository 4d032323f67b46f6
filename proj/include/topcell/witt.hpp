#pragma once

#include "topcell/intmat.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace topcell {

class FgAbGroup;
using GroupPtr = std::shared_ptr<const FgAbGroup>;

/// Finitely generated abelian group given by a presentation matrix whose
/// columns are relations among the generators. Smith normal form data is
/// computed once at construction; elements are integer coordinate vectors
/// compared through their canonical forms.
class FgAbGroup {
public:
    static GroupPtr make(size_t ngens, IMat relations);
    static GroupPtr free_group(size_t rank);
    /// Direct sum of cyclic groups Z/d (d = 0 gives a Z summand).
    static GroupPtr cyclic_product(const std::vector<Int>& orders);

    size_t ngens() const { return ngens_; }
    const IMat& relations() const { return rel_; }
    /// Invariant factors > 1, in divisibility order.
    const std::vector<Int>& invariant_factors() const { return factors_; }
    size_t free_rank() const { return free_rank_; }
    bool is_trivial() const { return factors_.empty() && free_rank_ == 0; }
    bool is_finite() const { return free_rank_ == 0; }
    std::optional<Int> order() const;

    std::vector<Int> canonical_form(const std::vector<Int>& x) const;
    bool is_zero_element(const std::vector<Int>& x) const;
    bool elements_equal(const std::vector<Int>& x, const std::vector<Int>& y) const;
    std::vector<Int> zero_element() const { return std::vector<Int>(ngens_, 0); }

    /// All elements (one representative each); requires a finite group of
    /// order at most `limit`.
    std::vector<std::vector<Int>> enumerate_elements(size_t limit = 4096) const;

    bool same_presentation(const FgAbGroup& other) const;

private:
    FgAbGroup() = default;

    size_t ngens_ = 0;
    IMat rel_;
    SnfResult snf_;
    IMat uinv_;
    std::vector<Int> coord_mods_;  // modulus per canonical coordinate, 0 = free
    std::vector<Int> factors_;
    size_t free_rank_ = 0;
};

/// Homomorphism between presented groups, given by an integer matrix on
/// generators. Well-definedness (relations map into relations) is certified
/// at construction.
class Homo {
public:
    Homo(GroupPtr src, GroupPtr dst, IMat matrix);
    static Homo zero(GroupPtr src, GroupPtr dst);
    static Homo identity(GroupPtr g);

    const GroupPtr& src() const { return src_; }
    const GroupPtr& dst() const { return dst_; }
    const IMat& matrix() const { return mat_; }

    std::vector<Int> apply(const std::vector<Int>& x) const { return mat_.apply(x); }
    bool is_zero_map() const;

    friend Homo compose(const Homo& g, const Homo& f);  // g after f
    friend Homo operator+(const Homo& a, const Homo& b);
    friend Homo operator-(const Homo& a, const Homo& b);
    /// Equality as maps (columns agree in the target group).
    bool equal(const Homo& other) const;

private:
    GroupPtr src_, dst_;
    IMat mat_;
};

/// Subgroup of an ambient presented group, spanned by the columns of `gens`.
struct Subgroup {
    GroupPtr ambient;
    IMat gens;  // ambient.ngens x k

    bool contains(const std::vector<Int>& x) const;
    bool contains(const Subgroup& other) const;
    bool equals(const Subgroup& other) const;
    /// Abstract group the subgroup presents.
    GroupPtr as_group() const;
};

struct KernelData {
    GroupPtr group;
    IMat inclusion;  // src.ngens x k, columns generate the kernel
    Subgroup subgroup;
};

KernelData kernel(const Homo& h);
Subgroup image(const Homo& h);
GroupPtr cokernel(const Homo& h);
bool is_injective(const Homo& h);
bool is_surjective(const Homo& h);
/// im(f) = ker(g) inside the middle group; requires f.dst == g.src.
bool exact_at(const Homo& f, const Homo& g);

enum class GroupCalcKind { kernel, image, cokernel };
GroupPtr group_calc(const Homo& h, GroupCalcKind what);

/// Named nodes and arrows with commutativity/exactness assertions.
struct DiagramSpec {
    struct Arrow {
        std::string src, dst;
        Homo hom;
    };
    struct CommuteAssertion {
        std::vector<std::string> left, right;  // paths, applied left to right
    };
    struct ExactAssertion {
        std::string first, second;  // exact at first.dst == second.src
    };
    using Assertion = std::variant<CommuteAssertion, ExactAssertion>;

    /// Cup-product data for the twisted criterion: maps[g] is the matrix of
    /// (g-th generator of the ch1 node) cup - from the mod-2 cycle node into
    /// the target of Sq2.
    struct CupData {
        std::string ch1_node;
        std::vector<IMat> maps;
    };

    std::map<std::string, GroupPtr> nodes;
    std::map<std::string, Arrow> arrows;
    std::vector<Assertion> assertions;
    std::optional<CupData> cup;

    bool has_arrow(const std::string& name) const { return arrows.count(name) != 0; }
    const Arrow& arrow(const std::string& name) const;
    void validate() const;
};

/// Conventional arrow names recognized by the lifting procedures.
namespace arrow_names {
inline constexpr const char* boundary = "del";
inline constexpr const char* mod2 = "mod2";
inline constexpr const char* beta = "beta";
inline constexpr const char* eta = "eta";
inline constexpr const char* rho = "rho";
inline constexpr const char* sq2 = "Sq2";
inline constexpr const char* sq2_top = "Sq2_top";
}  // namespace arrow_names

struct DiagramReport {
    struct Item {
        std::string description;
        bool pass = false;
        std::string detail;
    };
    std::vector<Item> items;
    bool all_pass() const;
};

DiagramReport check_diagram(const DiagramSpec& spec);

/// rho . beta == Sq2 as maps.
bool totaro_check(const DiagramSpec& spec);

enum class LiftOutcome { lifts, obstructed, needs_injectivity };
const char* lift_outcome_name(LiftOutcome o);

struct LiftVerdict {
    LiftOutcome outcome = LiftOutcome::lifts;
    std::vector<Int> witness;  // obstruction class (canonical form) when obstructed
    std::string route;         // "boundary" or "sq2"
    std::string detail;
};

/// Decides liftability of a cycle in the node designated CH^n (the source
/// of "del", else of "mod2"). With "del" present the boundary route is
/// used; otherwise the Sq2 route requires rho to be injective. A twist
/// class (coordinates in the cup data's ch1 node) switches the Sq2 route to
/// the twisted criterion Sq2(cbar) + twist cup cbar = 0.
LiftVerdict lift_query(const DiagramSpec& spec, const std::vector<Int>& cycle,
                       const std::optional<std::vector<Int>>& twist = std::nullopt);

struct PsiVerdict {
    bool lifts = false;
    std::vector<Int> psi_class;  // representative of psi(cbar) mod im(Sq2_top)
    std::string detail;
};

/// Secondary obstruction for a cycle killed by Sq2: solves eta(w) =
/// beta(cbar) and decides membership of the class in the image of the top
/// Sq2 arrow.
PsiVerdict psi_obstruction(const DiagramSpec& spec, const std::vector<Int>& cycle);

/// Chain diagram with exactness asserted at every interior node.
DiagramSpec make_chain_diagram(const std::vector<std::pair<std::string, GroupPtr>>& nodes,
                               const std::vector<std::pair<std::string, IMat>>& arrows);

}  // namespace topcell
