#include "fluxlink/model.hpp"

#include "fluxlink/errors.hpp"

#include <cmath>
#include <sstream>

namespace fluxlink {

std::string to_string(Regime r) {
    return r == Regime::Dispersive ? "dispersive" : "resonant";
}

SystemParams preset_dispersive() {
    SystemParams p;
    p.omega_a = mhz(5120.0);
    p.omega_b = mhz(1400.0);
    p.omega_A = mhz(5240.0);
    p.omega_B = mhz(1280.0);
    p.omega_e2g = mhz(5000.0);
    p.omega_e1g = mhz(1520.0);
    p.G_A = p.G_B = p.G_a = p.G_b = mhz(40.0);
    p.Omega = mhz(50.0);
    p.Gamma_A = p.Gamma_B = mhz(0.1);
    p.Gamma_AB = p.Gamma_BA = 0.0;
    p.regime = Regime::Dispersive;
    return p;
}

SystemParams preset_resonant() {
    SystemParams p = preset_dispersive();
    p.omega_A = mhz(5135.0);
    p.omega_e2g = mhz(5090.0);
    p.omega_e1g = mhz(1430.0);
    p.omega_B = mhz(1385.0);
    p.Omega = mhz(0.01);
    p.regime = Regime::Resonant;
    return p;
}

Detunings detunings(const SystemParams& p) {
    Detunings d;
    d.delta_Aa = std::abs(p.omega_a - p.omega_A);
    d.delta_aq = std::abs(p.omega_e2g - p.omega_a);
    d.delta_Bb = std::abs(p.omega_b - p.omega_B);
    d.delta_bq = std::abs(p.omega_e1g - p.omega_b);
    d.delta_e1e2 = p.omega_e2g - p.omega_e1g;
    return d;
}

double resonant_constraint_residual(const Detunings& d) {
    return d.delta_Bb - d.delta_bq - d.delta_e1e2 + d.delta_aq - d.delta_Aa;
}

namespace {

constexpr double kDetuningFloor = 1e-12; // rad/us; below this a division is rejected

void require_nonzero(double value, const char* name) {
    if (std::abs(value) < kDetuningFloor) {
        throw DivisionByZeroDetuning(std::string("detuning denominator ") + name + " is zero");
    }
}

} // namespace

EffectiveCoupling coupling_dispersive(const SystemParams& p) {
    const Detunings d = detunings(p);
    require_nonzero(d.delta_e1e2, "delta_e1e2");
    require_nonzero(d.delta_aq, "delta_aq");
    require_nonzero(d.delta_bq, "delta_bq");
    require_nonzero(d.delta_Aa, "delta_Aa");
    require_nonzero(d.delta_Bb, "delta_Bb");
    const double bracket =
        d.delta_Aa - d.delta_Bb + 4.0 * (d.delta_aq - d.delta_bq) + 6.0 * d.delta_e1e2;
    const double value = (1.0 / 20.0) * (p.Omega * p.G_a * p.G_b * p.G_A * p.G_B) /
                         (d.delta_e1e2 * d.delta_aq * d.delta_bq * d.delta_Aa * d.delta_Bb) *
                         bracket;
    return {value, Regime::Dispersive};
}

EffectiveCoupling coupling_resonant(const SystemParams& p) {
    const Detunings d = detunings(p);
    require_nonzero(d.delta_Aa, "delta_Aa");
    require_nonzero(d.delta_Bb, "delta_Bb");
    require_nonzero(d.delta_aq - d.delta_Aa, "delta_aq - delta_Aa");
    require_nonzero(d.delta_bq - d.delta_Bb, "delta_bq - delta_Bb");
    const double value = 2.0 * p.Omega * p.G_a * p.G_b * p.G_A * p.G_B /
                         (d.delta_Aa * d.delta_Bb * (d.delta_aq - d.delta_Aa) *
                          (d.delta_bq - d.delta_Bb));
    return {value, Regime::Resonant};
}

ComplexMatrix effective_hamiltonian(const EffectiveCoupling& g) {
    ComplexMatrix h(4, 4);
    h(1, 2) = g.value; // |eg><ge|
    h(2, 1) = g.value;
    return h;
}

FactorLayout FactorLayout::standard(std::size_t n_fock_a, std::size_t n_fock_b) {
    if (n_fock_a < 2 || n_fock_b < 2) {
        throw DimensionMismatch("FactorLayout: Fock truncation must be >= 2");
    }
    FactorLayout layout;
    layout.factors_ = {{"atomA", 2},
                       {"atomB", 2},
                       {"resA", n_fock_a},
                       {"resB", n_fock_b},
                       {"fluxQubit", 3}};
    return layout;
}

std::size_t FactorLayout::dim() const {
    std::size_t d = 1;
    for (const Factor& f : factors_) d *= f.dim;
    return d;
}

std::size_t FactorLayout::position_of(std::string_view name) const {
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        if (factors_[k].name == name) return k;
    }
    throw UnknownFactor("unknown factor name: " + std::string(name));
}

std::size_t FactorLayout::flat_index(const std::vector<std::size_t>& digits) const {
    if (digits.size() != factors_.size()) {
        throw DimensionMismatch("flat_index: digit count does not match factor count");
    }
    std::size_t idx = 0;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        if (digits[k] >= factors_[k].dim) {
            throw DimensionMismatch("flat_index: digit exceeds factor dimension");
        }
        idx = idx * factors_[k].dim + digits[k];
    }
    return idx;
}

ComplexMatrix embed(const ComplexMatrix& op, std::string_view factor, const FactorLayout& layout) {
    const std::size_t pos = layout.position_of(factor);
    const auto& factors = layout.factors();
    if (!op.is_square() || op.rows() != factors[pos].dim) {
        throw DimensionMismatch("embed: operator dimension does not match factor " +
                                std::string(factor));
    }
    std::size_t pre = 1, post = 1;
    for (std::size_t k = 0; k < pos; ++k) pre *= factors[k].dim;
    for (std::size_t k = pos + 1; k < factors.size(); ++k) post *= factors[k].dim;
    return kron(kron(ComplexMatrix::identity(pre), op), ComplexMatrix::identity(post));
}

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m(0, 1) = cxd(0.0, -1.0);
    m(1, 0) = cxd(0.0, 1.0);
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

ComplexMatrix sigma_minus() {
    ComplexMatrix m(2, 2);
    m(1, 0) = 1.0;
    return m;
}

ComplexMatrix sigma_plus() { return sigma_minus().dagger(); }

ComplexMatrix excited_projector() {
    ComplexMatrix m(2, 2);
    m(0, 0) = 1.0;
    return m;
}

ComplexMatrix annihilation(std::size_t n_fock) {
    ComplexMatrix m(n_fock, n_fock);
    for (std::size_t k = 1; k < n_fock; ++k) m(k - 1, k) = std::sqrt(double(k));
    return m;
}

ComplexMatrix number_operator(std::size_t n_fock) {
    ComplexMatrix m(n_fock, n_fock);
    for (std::size_t k = 0; k < n_fock; ++k) m(k, k) = double(k);
    return m;
}

ComplexMatrix flux_lower_ge2() {
    ComplexMatrix m(3, 3);
    m(0, 2) = 1.0;
    return m;
}

ComplexMatrix flux_lower_ge1() {
    ComplexMatrix m(3, 3);
    m(0, 1) = 1.0;
    return m;
}

ComplexMatrix flux_lower_e1e2() {
    ComplexMatrix m(3, 3);
    m(1, 2) = 1.0;
    return m;
}

ComplexMatrix flux_excitation() {
    ComplexMatrix m(3, 3);
    m(1, 1) = 1.0;
    m(2, 2) = 1.0;
    return m;
}

InteractionTerms::InteractionTerms(const SystemParams& p)
    : layout_(FactorLayout::standard(p.n_fock_a, p.n_fock_b)) {
    const Detunings d = detunings(p);
    const ComplexMatrix a_dag = embed(annihilation(p.n_fock_a).dagger(), "resA", layout_);
    const ComplexMatrix b_dag = embed(annihilation(p.n_fock_b).dagger(), "resB", layout_);

    auto add = [this](double strength, double detuning, const ComplexMatrix& op) {
        terms_.push_back({strength, detuning, op, op.dagger()});
    };
    add(p.G_A, d.delta_Aa, a_dag * embed(sigma_minus(), "atomA", layout_));
    add(p.G_a, d.delta_aq, a_dag * embed(flux_lower_ge2(), "fluxQubit", layout_));
    add(p.G_B, d.delta_Bb, b_dag * embed(sigma_minus(), "atomB", layout_));
    add(p.G_b, d.delta_bq, b_dag * embed(flux_lower_ge1(), "fluxQubit", layout_));
    add(p.Omega, d.delta_e1e2, embed(flux_lower_e1e2(), "fluxQubit", layout_));
}

ComplexMatrix InteractionTerms::assemble(double t) const {
    ComplexMatrix h(dim(), dim());
    for (const InteractionTerm& term : terms_) {
        if (term.strength == 0.0) continue;
        const cxd phase = std::exp(cxd(0.0, term.detuning * t));
        const cxd f = term.strength * phase;
        const cxd fc = term.strength * std::conj(phase);
        for (std::size_t i = 0; i < h.rows(); ++i)
            for (std::size_t j = 0; j < h.cols(); ++j) {
                const cxd x = term.op(i, j);
                if (x != cxd(0.0, 0.0)) h(i, j) += f * x;
                const cxd xd = term.op_dag(i, j);
                if (xd != cxd(0.0, 0.0)) h(i, j) += fc * xd;
            }
    }
    return h;
}

ComplexMatrix full_hamiltonian(const SystemParams& p, double t) {
    return InteractionTerms(p).assemble(t);
}

ComplexMatrix excitation_number(const FactorLayout& layout) {
    const std::size_t na = layout.factors()[layout.position_of("resA")].dim;
    const std::size_t nb = layout.factors()[layout.position_of("resB")].dim;
    ComplexMatrix n = embed(number_operator(na), "resA", layout);
    n += embed(number_operator(nb), "resB", layout);
    n += embed(excited_projector(), "atomA", layout);
    n += embed(excited_projector(), "atomB", layout);
    n += embed(flux_excitation(), "fluxQubit", layout);
    return n;
}

ComplexMatrix rotating_frame_generator(const SystemParams& p) {
    const FactorLayout layout = FactorLayout::standard(p.n_fock_a, p.n_fock_b);
    const Detunings d = detunings(p);
    // Gauge with the e2 level at zero; each coupling term then rotates at
    // exactly its detuning.
    const double na_shift = d.delta_aq;
    const double nb_shift = d.delta_bq + d.delta_e1e2;
    const double atomA_shift = d.delta_aq - d.delta_Aa;
    const double atomB_shift = nb_shift - d.delta_Bb;
    const double e1_shift = d.delta_e1e2;

    ComplexMatrix flux(3, 3);
    flux(1, 1) = e1_shift;

    ComplexMatrix k = na_shift * embed(number_operator(p.n_fock_a), "resA", layout);
    k += nb_shift * embed(number_operator(p.n_fock_b), "resB", layout);
    k += atomA_shift * embed(excited_projector(), "atomA", layout);
    k += atomB_shift * embed(excited_projector(), "atomB", layout);
    k += embed(flux, "fluxQubit", layout);
    return k;
}

ComplexMatrix lambda_generator(const SystemParams& p) {
    const Detunings d = detunings(p);
    require_nonzero(d.delta_Aa, "delta_Aa");
    require_nonzero(d.delta_aq, "delta_aq");
    require_nonzero(d.delta_e1e2, "delta_e1e2");
    require_nonzero(d.delta_Bb, "delta_Bb");
    require_nonzero(d.delta_bq, "delta_bq");

    const InteractionTerms terms(p);
    ComplexMatrix lam(terms.dim(), terms.dim());
    for (const InteractionTerm& term : terms.terms()) {
        if (term.strength == 0.0) continue;
        lam += (term.strength / term.detuning) * (term.op - term.op_dag);
    }
    return lam;
}

ComplexMatrix bch_effective(const ComplexMatrix& h, const ComplexMatrix& lambda, int order) {
    if (!h.is_square() || !lambda.is_square() || h.rows() != lambda.rows()) {
        throw DimensionMismatch("bch_effective: operands must be square and equal size");
    }
    if (order < 0) throw DimensionMismatch("bch_effective: order must be >= 0");
    ComplexMatrix out = h;
    ComplexMatrix term = h; // ad^k(h) / k!, built iteratively
    for (int k = 1; k <= order; ++k) {
        term = cxd(1.0 / double(k)) * commutator(lambda, term);
        out += term;
    }
    return out;
}

std::vector<std::string> regime_warnings(const SystemParams& p) {
    const Detunings d = detunings(p);
    std::vector<std::string> warnings;
    auto note = [&warnings](const std::string& msg) { warnings.push_back(msg); };
    auto fmt = [](double v) {
        std::ostringstream os;
        os << v / two_pi;
        return os.str();
    };

    struct Pair {
        const char* delta_name;
        double delta;
        const char* g_name;
        double g;
    };
    const Pair pairs[] = {{"delta_aq", d.delta_aq, "G_a", p.G_a},
                          {"delta_bq", d.delta_bq, "G_b", p.G_b},
                          {"delta_Aa", d.delta_Aa, "G_A", p.G_A},
                          {"delta_Bb", d.delta_Bb, "G_B", p.G_B}};

    if (p.regime == Regime::Dispersive) {
        for (const Pair& pr : pairs) {
            if (!(pr.delta > pr.g)) {
                note(std::string("dispersive condition ") + pr.delta_name + " >> " + pr.g_name +
                     " not met (" + fmt(pr.delta) + " MHz vs " + fmt(pr.g) + " MHz)");
            }
        }
        if (p.Omega * p.Omega > 0.1 * d.delta_aq * d.delta_bq) {
            note("drive condition delta_aq*delta_bq >> Omega^2 is marginal (Omega = " +
                 fmt(p.Omega) + " MHz)");
        }
    } else {
        for (const Pair& pr : pairs) {
            if (!(pr.delta < pr.g)) {
                note(std::string("resonant condition ") + pr.delta_name + " << " + pr.g_name +
                     " not met (" + fmt(pr.delta) + " MHz vs " + fmt(pr.g) + " MHz)");
            }
        }
    }
    return warnings;
}

} // namespace fluxlink
