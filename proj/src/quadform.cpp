#include "padicforms/quadform.hpp"

#include "padicforms/newton.hpp"

namespace padicforms {

namespace {

LocalFieldElement product(const std::vector<LocalFieldElement>& xs)
{
    LocalFieldElement r = xs.front().field().element(1);
    for (const auto& x : xs) r = r * x;
    return r;
}

}  // namespace

int hasse_invariant(const std::vector<LocalFieldElement>& entries)
{
    int s = 1;
    for (size_t i = 0; i < entries.size(); ++i)
        for (size_t j = i + 1; j < entries.size(); ++j) s *= hilbert_symbol(entries[i], entries[j]);
    return s;
}

bool isotropic_over_local(const std::vector<LocalFieldElement>& a)
{
    for (const auto& x : a)
        if (x.is_zero()) throw Error("DomainError", "form entries must be nonzero");
    switch (a.size()) {
    case 0:
    case 1:
        return false;
    case 2:
        return is_square(-(a[0] * a[1]));
    case 3:
        return hilbert_symbol(-(a[0] * a[2]), -(a[1] * a[2])) == 1;
    case 4: {
        if (!is_square(product(a))) return true;
        const LocalFieldElement m1 = -a[0].field().element(1);
        return hasse_invariant(a) == hilbert_symbol(m1, m1);
    }
    default:
        return true;
    }
}

bool isotropic_over_local(const std::vector<Rational>& entries, const PadicContext& ctx)
{
    LocalField K = LocalField::base(ctx);
    std::vector<LocalFieldElement> a;
    for (const auto& x : entries) a.push_back(K.element(x));
    return isotropic_over_local(a);
}

bool pi_multiple_is_zero(const std::vector<LocalFieldElement>& psi)
{
    if (psi.empty()) return true;
    const LocalField& L = psi.front().field();
    if (psi.size() % 2 == 1) {
        // <1,pi> has trivial discriminant class only when -pi is a square
        return is_square(-L.pi());
    }
    LocalFieldElement prod = product(psi);
    if ((psi.size() / 2) % 2 == 1) prod = -prod;
    return i2_class(prod) == 1;
}

bool witt_zero(const std::vector<LocalFieldElement>& a)
{
    if (a.empty()) return true;
    if (a.size() % 2) return false;
    const LocalField& L = a.front().field();
    LocalFieldElement d = product(a);
    if ((a.size() / 2) % 2 == 1) d = -d;
    if (!is_square(d)) return false;
    std::vector<LocalFieldElement> h;
    for (size_t k = 0; k < a.size(); ++k) h.push_back(L.element(k % 2 ? -1 : 1));
    return hasse_invariant(a) == hasse_invariant(h);
}

// ---- factor base ----

FactorBase::FactorBase(PadicContext ctx) : ctx_(std::move(ctx))
{
    polys_.push_back(QPoly::x());
    evidence_.push_back("linear");
}

int FactorBase::add(const QPoly& q0)
{
    QPoly q = q0.monic();
    if (auto k = find(q)) return *k;
    auto ev = irreducibility_evidence(q, ctx_);
    if (!ev) throw Error("NotIrreducible", "cannot certify irreducibility of a factor");
    polys_.push_back(q);
    evidence_.push_back(*ev);
    return size() - 1;
}

std::optional<int> FactorBase::find(const QPoly& q) const
{
    for (int k = 0; k < size(); ++k)
        if (polys_[static_cast<size_t>(k)] == q) return k;
    return std::nullopt;
}

LocalField FactorBase::field(int k) const
{
    auto it = fields_.find(k);
    if (it == fields_.end()) it = fields_.emplace(k, LocalField::adjoin_root(ctx_, poly(k))).first;
    return it->second;
}

// ---- factored elements ----

int FactoredElement::exponent(int k) const
{
    auto it = powers.find(k);
    return it == powers.end() ? 0 : it->second;
}

FactoredElement FactoredElement::operator*(const FactoredElement& o) const
{
    FactoredElement r{unit * o.unit, powers};
    for (const auto& [k, e] : o.powers) {
        int& x = r.powers[k];
        x += e;
        if (x == 0) r.powers.erase(k);
    }
    return r;
}

std::pair<QPoly, QPoly> FactoredElement::expand(const FactorBase& base) const
{
    QPoly num(unit), den(1);
    for (const auto& [k, e] : powers) {
        if (e > 0)
            num = num * base.poly(k).pow(static_cast<unsigned>(e));
        else
            den = den * base.poly(k).pow(static_cast<unsigned>(-e));
    }
    return {num, den};
}

std::string FactoredElement::str(const FactorBase& base) const
{
    std::string s = to_short_string(unit);
    for (const auto& [k, e] : powers) {
        s += "*(" + to_string(base.poly(k)) + ")";
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::vector<FactoredElement> FunctionForm::expanded(const PadicContext& ctx) const
{
    std::vector<FactoredElement> out = entries;
    if (pi_multiple)
        for (const auto& x : entries) out.push_back(FactoredElement::constant(ctx.pi()) * x);
    return out;
}

// ---- residues ----

ResidueSplit second_residue(const FunctionForm& form, int place, const FactorBase& base)
{
    for (const auto& x : form.entries)
        for (const auto& [k, e] : x.powers)
            if (k < 0 || k >= base.size()) throw Error("UnknownFactorization", "entry uses a factor outside the base");
    LocalField L = base.field(place);
    ResidueSplit out{place, base.poly(place), {}, {}, form.pi_multiple};
    for (const auto& x : form.entries) {
        LocalFieldElement val = L.element(x.unit);
        for (const auto& [k, e] : x.powers) {
            if (k == place) continue;
            val = val * L.element(base.poly(k)).pow(e);
        }
        if (val.is_zero()) throw Error("UnknownFactorization", "factor vanishes at the residue place");
        (x.exponent(place) % 2 == 0 ? out.first : out.second).push_back(val);
    }
    return out;
}

namespace {

bool residue_zero(const std::vector<LocalFieldElement>& xs, bool pi_multiple)
{
    return pi_multiple ? pi_multiple_is_zero(xs) : witt_zero(xs);
}

std::vector<LocalFieldElement> with_pi(const std::vector<LocalFieldElement>& xs, bool pi_multiple)
{
    std::vector<LocalFieldElement> out = xs;
    if (pi_multiple && !xs.empty()) {
        LocalFieldElement pi = xs.front().field().pi();
        for (const auto& x : xs) out.push_back(pi * x);
    }
    return out;
}

}  // namespace

MilnorVerdict milnor_isotropy(const FunctionForm& form, const FactorBase& base)
{
    MilnorVerdict v;
    for (int k = 0; k < base.size(); ++k) {
        bool odd = false;
        for (const auto& x : form.entries) odd = odd || (x.exponent(k) % 2 != 0);
        if (!odd) continue;
        ResidueSplit rs = second_residue(form, k, base);
        const int mult = rs.pi_multiple ? 2 : 1;
        ResidueTest t{k, to_string(base.poly(k)), mult * static_cast<int>(rs.first.size()),
                      mult * static_cast<int>(rs.second.size()), residue_zero(rs.second, rs.pi_multiple)};
        v.tests.push_back(t);
        if (!t.second_zero && !v.blocking) v.blocking = k;
    }
    // all residues vanish: the form is Witt equivalent to a constant form of dimension <= 4
    v.isotropic = !v.blocking && form.dimension() > 4;
    return v;
}

bool springer_anisotropy(const FunctionForm& form, int place, const FactorBase& base)
{
    ResidueSplit rs = second_residue(form, place, base);
    auto first = with_pi(rs.first, rs.pi_multiple);
    auto second = with_pi(rs.second, rs.pi_multiple);
    return !isotropic_over_local(first) && !isotropic_over_local(second);
}

}  // namespace padicforms
