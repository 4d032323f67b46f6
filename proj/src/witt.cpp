#include "topcell/witt.hpp"

#include <algorithm>
#include <sstream>

namespace topcell {

namespace {

std::string vec_str(const std::vector<Int>& v) {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out << ",";
        out << v[i].str();
    }
    out << "]";
    return out.str();
}

}  // namespace

GroupPtr FgAbGroup::make(size_t ngens, IMat relations) {
    if (relations.rows != ngens) {
        if (relations.rows == 0 && relations.cols == 0)
            relations = IMat(ngens, 0);
        else
            fail(errc::invalid_argument, "relation matrix must have one row per generator");
    }
    auto g = std::shared_ptr<FgAbGroup>(new FgAbGroup());
    g->ngens_ = ngens;
    g->rel_ = std::move(relations);
    g->snf_ = smith_normal_form(g->rel_);
    g->uinv_ = inverse_unimodular(g->snf_.u);
    g->coord_mods_.assign(ngens, 0);
    size_t n = std::min(g->rel_.rows, g->rel_.cols);
    for (size_t i = 0; i < n; ++i) g->coord_mods_[i] = g->snf_.d.at(i, i);
    for (const Int& d : g->coord_mods_) {
        if (d > 1) g->factors_.push_back(d);
        if (d == 0) ++g->free_rank_;
    }
    return g;
}

GroupPtr FgAbGroup::free_group(size_t rank) { return make(rank, IMat(rank, 0)); }

GroupPtr FgAbGroup::cyclic_product(const std::vector<Int>& orders) {
    size_t n = orders.size();
    std::vector<size_t> torsion;
    for (size_t i = 0; i < n; ++i)
        if (orders[i] != 0) torsion.push_back(i);
    IMat rel(n, torsion.size());
    for (size_t j = 0; j < torsion.size(); ++j) rel.at(torsion[j], j) = orders[torsion[j]];
    return make(n, std::move(rel));
}

std::optional<Int> FgAbGroup::order() const {
    if (free_rank_ > 0) return std::nullopt;
    Int n = 1;
    for (const Int& d : factors_) n *= d;
    return n;
}

std::vector<Int> FgAbGroup::canonical_form(const std::vector<Int>& x) const {
    if (x.size() != ngens_) fail(errc::shape_mismatch, "element coordinate length");
    std::vector<Int> y = snf_.u.apply(x);
    for (size_t i = 0; i < ngens_; ++i) {
        const Int& d = coord_mods_[i];
        if (d != 0) {
            y[i] %= d;
            if (y[i] < 0) y[i] += d;
        }
    }
    return y;
}

bool FgAbGroup::is_zero_element(const std::vector<Int>& x) const {
    std::vector<Int> y = canonical_form(x);
    return std::all_of(y.begin(), y.end(), [](const Int& v) { return v == 0; });
}

bool FgAbGroup::elements_equal(const std::vector<Int>& x, const std::vector<Int>& y) const {
    return canonical_form(x) == canonical_form(y);
}

std::vector<std::vector<Int>> FgAbGroup::enumerate_elements(size_t limit) const {
    auto n = order();
    if (!n) fail(errc::invalid_argument, "cannot enumerate an infinite group");
    if (*n > limit) fail(errc::invalid_argument, "group too large to enumerate");
    std::vector<std::vector<Int>> canon = {std::vector<Int>(ngens_, 0)};
    for (size_t i = 0; i < ngens_; ++i) {
        const Int& d = coord_mods_[i];
        if (d <= 1) continue;
        std::vector<std::vector<Int>> next;
        for (Int v = 0; v < d; ++v)
            for (const auto& base : canon) {
                std::vector<Int> y = base;
                y[i] = v;
                next.push_back(std::move(y));
            }
        canon = std::move(next);
    }
    std::vector<std::vector<Int>> out;
    out.reserve(canon.size());
    for (const auto& y : canon) out.push_back(uinv_.apply(y));
    return out;
}

bool FgAbGroup::same_presentation(const FgAbGroup& other) const {
    return this == &other || (ngens_ == other.ngens_ && rel_ == other.rel_);
}

Homo::Homo(GroupPtr src, GroupPtr dst, IMat matrix)
    : src_(std::move(src)), dst_(std::move(dst)), mat_(std::move(matrix)) {
    if (!src_ || !dst_) fail(errc::invalid_argument, "null group");
    if (mat_.rows != dst_->ngens() || mat_.cols != src_->ngens())
        fail(errc::endpoint_mismatch, "matrix shape does not match the groups");
    for (size_t j = 0; j < src_->relations().cols; ++j) {
        std::vector<Int> image = mat_.apply(src_->relations().column(j));
        if (!dst_->is_zero_element(image))
            fail(errc::ill_defined_homo, "relation " + std::to_string(j) +
                                             " does not map to zero: " + vec_str(image));
    }
}

Homo Homo::zero(GroupPtr src, GroupPtr dst) {
    IMat m(dst->ngens(), src->ngens());
    return Homo(std::move(src), std::move(dst), std::move(m));
}

Homo Homo::identity(GroupPtr g) {
    IMat m = IMat::identity(g->ngens());
    return Homo(g, g, std::move(m));
}

bool Homo::is_zero_map() const {
    for (size_t j = 0; j < mat_.cols; ++j)
        if (!dst_->is_zero_element(mat_.column(j))) return false;
    return true;
}

Homo compose(const Homo& g, const Homo& f) {
    if (!g.src_->same_presentation(*f.dst_))
        fail(errc::endpoint_mismatch, "composition endpoints do not match");
    return Homo(f.src_, g.dst_, g.mat_ * f.mat_);
}

Homo operator+(const Homo& a, const Homo& b) {
    if (!a.src_->same_presentation(*b.src_) || !a.dst_->same_presentation(*b.dst_))
        fail(errc::endpoint_mismatch, "sum endpoints do not match");
    return Homo(a.src_, a.dst_, a.mat_ + b.mat_);
}

Homo operator-(const Homo& a, const Homo& b) {
    if (!a.src_->same_presentation(*b.src_) || !a.dst_->same_presentation(*b.dst_))
        fail(errc::endpoint_mismatch, "difference endpoints do not match");
    return Homo(a.src_, a.dst_, a.mat_ - b.mat_);
}

bool Homo::equal(const Homo& other) const {
    if (!src_->same_presentation(*other.src_) || !dst_->same_presentation(*other.dst_))
        return false;
    for (size_t j = 0; j < mat_.cols; ++j) {
        std::vector<Int> diff(mat_.rows);
        for (size_t i = 0; i < mat_.rows; ++i) diff[i] = mat_.at(i, j) - other.mat_.at(i, j);
        if (!dst_->is_zero_element(diff)) return false;
    }
    return true;
}

bool Subgroup::contains(const std::vector<Int>& x) const {
    IMat b = IMat::hconcat(gens, ambient->relations());
    return solve_columns(b, x).has_value();
}

bool Subgroup::contains(const Subgroup& other) const {
    if (!ambient->same_presentation(*other.ambient)) return false;
    for (size_t j = 0; j < other.gens.cols; ++j)
        if (!contains(other.gens.column(j))) return false;
    return true;
}

bool Subgroup::equals(const Subgroup& other) const {
    return contains(other) && other.contains(*this);
}

GroupPtr Subgroup::as_group() const {
    // Relations among the k spanning columns: preimage lattice of the
    // ambient relation lattice under the generator matrix.
    size_t k = gens.cols;
    IMat b = IMat::hconcat(gens, ambient->relations());
    IMat ker = integer_kernel(b);
    IMat rel(k, ker.cols);
    for (size_t j = 0; j < ker.cols; ++j)
        for (size_t i = 0; i < k; ++i) rel.at(i, j) = ker.at(i, j);
    return FgAbGroup::make(k, std::move(rel));
}

KernelData kernel(const Homo& h) {
    // {x : h(x) in relation lattice of dst} = projection of the integer
    // kernel of [matrix | dst relations] onto the source coordinates.
    size_t ns = h.src()->ngens();
    IMat b = IMat::hconcat(h.matrix(), h.dst()->relations());
    IMat ker = integer_kernel(b);
    IMat incl(ns, ker.cols);
    for (size_t j = 0; j < ker.cols; ++j)
        for (size_t i = 0; i < ns; ++i) incl.at(i, j) = ker.at(i, j);
    KernelData out;
    out.inclusion = incl;
    out.subgroup = Subgroup{h.src(), incl};
    out.group = out.subgroup.as_group();
    return out;
}

Subgroup image(const Homo& h) { return Subgroup{h.dst(), h.matrix()}; }

GroupPtr cokernel(const Homo& h) {
    IMat rel = IMat::hconcat(h.matrix(), h.dst()->relations());
    return FgAbGroup::make(h.dst()->ngens(), std::move(rel));
}

bool is_injective(const Homo& h) {
    KernelData k = kernel(h);
    return k.group->is_trivial();
}

bool is_surjective(const Homo& h) { return cokernel(h)->is_trivial(); }

bool exact_at(const Homo& f, const Homo& g) {
    if (!f.dst()->same_presentation(*g.src()))
        fail(errc::endpoint_mismatch, "exactness needs f.dst == g.src");
    Subgroup im = image(f);
    KernelData ker_g = kernel(g);
    // Both implicitly contain the relation lattice; compare as subgroups.
    Subgroup im_full{f.dst(), IMat::hconcat(im.gens, f.dst()->relations())};
    Subgroup ker_full{f.dst(), IMat::hconcat(ker_g.inclusion, f.dst()->relations())};
    return im_full.equals(ker_full);
}

GroupPtr group_calc(const Homo& h, GroupCalcKind what) {
    switch (what) {
        case GroupCalcKind::kernel: return kernel(h).group;
        case GroupCalcKind::image: return image(h).as_group();
        case GroupCalcKind::cokernel: return cokernel(h);
    }
    fail(errc::invalid_argument, "unknown group_calc kind");
}

const DiagramSpec::Arrow& DiagramSpec::arrow(const std::string& name) const {
    auto it = arrows.find(name);
    if (it == arrows.end()) fail(errc::missing_arrow, name);
    return it->second;
}

void DiagramSpec::validate() const {
    for (const auto& [name, arr] : arrows) {
        auto s = nodes.find(arr.src);
        auto d = nodes.find(arr.dst);
        if (s == nodes.end() || d == nodes.end())
            fail(errc::malformed_spec, "arrow " + name + " references an unknown node");
        if (!arr.hom.src()->same_presentation(*s->second) ||
            !arr.hom.dst()->same_presentation(*d->second))
            fail(errc::malformed_spec, "arrow " + name + " endpoints do not match its map");
    }
    for (const auto& assertion : assertions) {
        if (const auto* c = std::get_if<CommuteAssertion>(&assertion)) {
            if (c->left.empty() || c->right.empty())
                fail(errc::malformed_spec, "empty commutativity path");
            for (const auto& n : c->left) arrow(n);
            for (const auto& n : c->right) arrow(n);
        } else {
            const auto& e = std::get<ExactAssertion>(assertion);
            if (!arrow(e.first).hom.dst()->same_presentation(*arrow(e.second).hom.src()))
                fail(errc::malformed_spec,
                     "exactness pair " + e.first + ", " + e.second + " is not composable");
        }
    }
    if (cup) {
        auto it = nodes.find(cup->ch1_node);
        if (it == nodes.end()) fail(errc::malformed_spec, "cup data references an unknown node");
        if (cup->maps.size() != it->second->ngens())
            fail(errc::malformed_spec, "cup data needs one matrix per ch1 generator");
    }
}

namespace {

Homo compose_path(const DiagramSpec& spec, const std::vector<std::string>& path) {
    Homo h = spec.arrow(path.front()).hom;
    for (size_t i = 1; i < path.size(); ++i) h = compose(spec.arrow(path[i]).hom, h);
    return h;
}

std::string path_str(const std::vector<std::string>& path) {
    std::string s;
    for (size_t i = 0; i < path.size(); ++i) {
        if (i) s += ".";
        s += path[i];
    }
    return s;
}

}  // namespace

bool DiagramReport::all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const Item& i) { return i.pass; });
}

DiagramReport check_diagram(const DiagramSpec& spec) {
    spec.validate();
    DiagramReport report;
    for (const auto& assertion : spec.assertions) {
        DiagramReport::Item item;
        if (const auto* c = std::get_if<DiagramSpec::CommuteAssertion>(&assertion)) {
            item.description = "commute: " + path_str(c->left) + " = " + path_str(c->right);
            Homo left = compose_path(spec, c->left);
            Homo right = compose_path(spec, c->right);
            if (!left.src()->same_presentation(*right.src()) ||
                !left.dst()->same_presentation(*right.dst())) {
                item.pass = false;
                item.detail = "paths have different endpoints";
            } else {
                item.pass = left.equal(right);
                if (!item.pass) item.detail = "path matrices differ in the target group";
            }
        } else {
            const auto& e = std::get<DiagramSpec::ExactAssertion>(assertion);
            item.description = "exact: im(" + e.first + ") = ker(" + e.second + ")";
            item.pass = exact_at(spec.arrow(e.first).hom, spec.arrow(e.second).hom);
            if (!item.pass) item.detail = "image and kernel differ";
        }
        report.items.push_back(std::move(item));
    }
    return report;
}

bool totaro_check(const DiagramSpec& spec) {
    const Homo& beta = spec.arrow(arrow_names::beta).hom;
    const Homo& rho = spec.arrow(arrow_names::rho).hom;
    const Homo& sq2 = spec.arrow(arrow_names::sq2).hom;
    if (!beta.dst()->same_presentation(*rho.src()))
        fail(errc::endpoint_mismatch, "beta and rho are not composable");
    return compose(rho, beta).equal(sq2);
}

const char* lift_outcome_name(LiftOutcome o) {
    switch (o) {
        case LiftOutcome::lifts: return "Lifts";
        case LiftOutcome::obstructed: return "Obstructed";
        case LiftOutcome::needs_injectivity: return "NeedsInjectivity";
    }
    return "?";
}

LiftVerdict lift_query(const DiagramSpec& spec, const std::vector<Int>& cycle,
                       const std::optional<std::vector<Int>>& twist) {
    if (twist && !spec.cup)
        fail(errc::twist_without_cup, "twist class given but no cup-product data");

    LiftVerdict v;
    if (spec.has_arrow(arrow_names::boundary) && !twist) {
        const Homo& del = spec.arrow(arrow_names::boundary).hom;
        std::vector<Int> w = del.apply(cycle);
        v.route = "boundary";
        if (del.dst()->is_zero_element(w)) {
            v.outcome = LiftOutcome::lifts;
            v.detail = "del(cycle) = 0";
        } else {
            v.outcome = LiftOutcome::obstructed;
            v.witness = del.dst()->canonical_form(w);
            v.detail = "del(cycle) = " + vec_str(v.witness);
        }
        return v;
    }

    const Homo& mod2 = spec.arrow(arrow_names::mod2).hom;
    const Homo& sq2 = spec.arrow(arrow_names::sq2).hom;
    const Homo& rho = spec.arrow(arrow_names::rho).hom;
    v.route = "sq2";
    if (!is_injective(rho)) {
        v.outcome = LiftOutcome::needs_injectivity;
        v.detail = "rho is not injective; the Sq2 criterion does not apply";
        return v;
    }
    std::vector<Int> cbar = mod2.apply(cycle);
    std::vector<Int> obstruction = sq2.apply(cbar);
    if (twist) {
        if (twist->size() != spec.cup->maps.size())
            fail(errc::shape_mismatch, "twist class coordinate length");
        for (size_t g = 0; g < twist->size(); ++g) {
            if ((*twist)[g] == 0) continue;
            std::vector<Int> part = spec.cup->maps[g].apply(cbar);
            for (size_t i = 0; i < obstruction.size(); ++i)
                obstruction[i] += (*twist)[g] * part[i];
        }
        v.route = "sq2+twist";
    }
    if (sq2.dst()->is_zero_element(obstruction)) {
        v.outcome = LiftOutcome::lifts;
        v.detail = twist ? "(Sq2 + twist cup)(cbar) = 0" : "Sq2(cbar) = 0";
    } else {
        v.outcome = LiftOutcome::obstructed;
        v.witness = sq2.dst()->canonical_form(obstruction);
        v.detail = (twist ? std::string("(Sq2 + twist cup)(cbar) = ") : std::string("Sq2(cbar) = ")) +
                   vec_str(v.witness);
    }
    return v;
}

PsiVerdict psi_obstruction(const DiagramSpec& spec, const std::vector<Int>& cycle) {
    const Homo& mod2 = spec.arrow(arrow_names::mod2).hom;
    const Homo& sq2 = spec.arrow(arrow_names::sq2).hom;
    const Homo& beta = spec.arrow(arrow_names::beta).hom;
    const Homo& eta = spec.arrow(arrow_names::eta).hom;
    const Homo& sq2_top = spec.arrow(arrow_names::sq2_top).hom;

    std::vector<Int> cbar = mod2.apply(cycle);
    if (!sq2.dst()->is_zero_element(sq2.apply(cbar)))
        fail(errc::cycle_not_in_kernel, "Sq2(cbar) != 0");

    std::vector<Int> target = beta.apply(cbar);
    PsiVerdict v;
    // Membership beta(cbar) in eta(im Sq2_top), i.e. psi(cbar) in im(Sq2_top)
    // independent of the choice of eta-preimage.
    IMat reach = IMat::hconcat(eta.matrix() * sq2_top.matrix(), beta.dst()->relations());
    v.lifts = solve_columns(reach, target).has_value();
    // Witness: an eta-preimage of beta(cbar), reduced mod im(Sq2_top).
    IMat eta_sys = IMat::hconcat(eta.matrix(), eta.dst()->relations());
    auto sol = solve_columns(eta_sys, target);
    if (!sol)
        fail(errc::malformed_spec, "beta(cbar) has no eta-preimage; the column is not exact");
    std::vector<Int> w(sol->begin(), sol->begin() + static_cast<long>(eta.src()->ngens()));
    IMat quot_rel = IMat::hconcat(eta.src()->relations(), sq2_top.matrix());
    GroupPtr quotient = FgAbGroup::make(eta.src()->ngens(), std::move(quot_rel));
    v.psi_class = quotient->canonical_form(w);
    v.detail = v.lifts ? "psi(cbar) lies in the image of the top Sq2"
                       : "psi(cbar) = " + vec_str(v.psi_class) + " outside im(Sq2_top)";
    return v;
}

DiagramSpec make_chain_diagram(const std::vector<std::pair<std::string, GroupPtr>>& nodes,
                               const std::vector<std::pair<std::string, IMat>>& arrows) {
    if (nodes.size() < 2 || arrows.size() + 1 != nodes.size())
        fail(errc::endpoint_mismatch, "chain needs n nodes and n-1 arrows");
    DiagramSpec spec;
    for (const auto& [name, g] : nodes) {
        if (!spec.nodes.emplace(name, g).second)
            fail(errc::malformed_spec, "duplicate node name: " + name);
    }
    for (size_t i = 0; i < arrows.size(); ++i) {
        const auto& [name, mat] = arrows[i];
        if (mat.cols != nodes[i].second->ngens() || mat.rows != nodes[i + 1].second->ngens())
            fail(errc::endpoint_mismatch, "arrow " + name + " shape does not match its endpoints");
        Homo h(nodes[i].second, nodes[i + 1].second, mat);
        if (!spec.arrows.emplace(name, DiagramSpec::Arrow{nodes[i].first, nodes[i + 1].first, h})
                 .second)
            fail(errc::malformed_spec, "duplicate arrow name: " + name);
    }
    for (size_t i = 0; i + 1 < arrows.size(); ++i)
        spec.assertions.push_back(
            DiagramSpec::ExactAssertion{arrows[i].first, arrows[i + 1].first});
    return spec;
}

}  // namespace topcell
