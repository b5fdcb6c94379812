#pragma once

#include "fluxlink/linalg.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fluxlink {

// Unit conventions: hbar = 1, time in microseconds, every frequency and rate
// an angular frequency in rad/us. A quantity quoted as "2pi x f MHz" enters
// as two_pi * f.
inline constexpr double two_pi = 6.283185307179586476925286766559;

/// f in MHz (2pi convention) -> angular frequency in rad/us.
inline constexpr double mhz(double f) { return two_pi * f; }

enum class Regime { Dispersive, Resonant };

std::string to_string(Regime r);

/// Every physical constant of the two-atom / two-resonator / driven
/// flux-qubit system.
struct SystemParams {
    double omega_a = 0.0;   // resonator a mode frequency
    double omega_b = 0.0;   // resonator b mode frequency
    double omega_A = 0.0;   // atom A transition frequency
    double omega_B = 0.0;   // atom B transition frequency
    double omega_e1g = 0.0; // flux-qubit e1 <-> g transition frequency
    double omega_e2g = 0.0; // flux-qubit e2 <-> g transition frequency

    double G_A = 0.0; // atom A <-> resonator a coupling
    double G_B = 0.0; // atom B <-> resonator b coupling
    double G_a = 0.0; // flux qubit (e2,g) <-> resonator a coupling
    double G_b = 0.0; // flux qubit (e1,g) <-> resonator b coupling

    double Omega = 0.0; // classical drive amplitude on e1 <-> e2

    double Gamma_A = 0.0;  // atom A decay rate
    double Gamma_B = 0.0;  // atom B decay rate
    double Gamma_AB = 0.0; // cross-damping rate (A,B)
    double Gamma_BA = 0.0; // cross-damping rate (B,A)

    Regime regime = Regime::Dispersive;

    std::size_t n_fock_a = 2; // Fock truncation of resonator a
    std::size_t n_fock_b = 2; // Fock truncation of resonator b
};

/// Parameter set of the dispersive working point: all four resonator
/// detunings 2pi x 120 MHz, couplings 2pi x 40 MHz, drive 2pi x 50 MHz.
SystemParams preset_dispersive();

/// Parameter set of the resonant working point: qubit-resonator detunings
/// 2pi x 30 MHz, atom-resonator detunings 2pi x 15 MHz, drive 2pi x 0.01 MHz.
SystemParams preset_resonant();

struct Detunings {
    double delta_Aa = 0.0;   // |omega_a - omega_A|
    double delta_aq = 0.0;   // |omega_e2g - omega_a|
    double delta_Bb = 0.0;   // |omega_b - omega_B|
    double delta_bq = 0.0;   // |omega_e1g - omega_b|
    double delta_e1e2 = 0.0; // omega_e2g - omega_e1g (signed)
};

Detunings detunings(const SystemParams& p);

/// delta_Bb - delta_bq - delta_e1e2 + delta_aq - delta_Aa. Zero is the
/// resonance condition for the five-step atom-to-atom exchange; callers
/// report nonzero residuals as warnings rather than hard errors.
double resonant_constraint_residual(const Detunings& d);

struct EffectiveCoupling {
    double value = 0.0;
    Regime regime = Regime::Dispersive;
};

/// G_D = (1/20) Omega Ga Gb GA GB / (De Daq Dbq DAa DBb)
///       * [DAa - DBb + 4(Daq - Dbq) + 6 De].
EffectiveCoupling coupling_dispersive(const SystemParams& p);

/// G_R = 2 Omega Ga Gb GA GB / (DAa DBb (Daq - DAa)(Dbq - DBb)).
EffectiveCoupling coupling_resonant(const SystemParams& p);

/// 4x4 exchange Hamiltonian G (sA- sB+ + sA+ sB-) in the computational
/// basis |ee>, |eg>, |ge>, |gg|.
ComplexMatrix effective_hamiltonian(const EffectiveCoupling& g);

/// Ordered tensor-product structure of the full Hilbert space.
/// Basis conventions: atoms (e=0, g=1); flux qubit (g=0, e1=1, e2=2);
/// resonators in Fock order |0>, |1>, ...
class FactorLayout {
public:
    struct Factor {
        std::string name;
        std::size_t dim;
    };

    static FactorLayout standard(std::size_t n_fock_a, std::size_t n_fock_b);

    const std::vector<Factor>& factors() const { return factors_; }
    std::size_t dim() const;
    std::size_t position_of(std::string_view name) const; // throws UnknownFactor

    /// Flat index of the product basis state with the given per-factor indices.
    std::size_t flat_index(const std::vector<std::size_t>& digits) const;

private:
    std::vector<Factor> factors_;
};

/// Lift a single-factor operator to the full space: identity on all other
/// factors, Kronecker order per layout.
ComplexMatrix embed(const ComplexMatrix& op, std::string_view factor, const FactorLayout& layout);

// Elementary operator blocks (dimensions as noted).
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix sigma_minus();        // |g><e|, 2x2
ComplexMatrix sigma_plus();         // |e><g|, 2x2
ComplexMatrix excited_projector();  // |e><e|, 2x2
ComplexMatrix annihilation(std::size_t n_fock);
ComplexMatrix number_operator(std::size_t n_fock);
ComplexMatrix flux_lower_ge2();     // |g><e2|, 3x3
ComplexMatrix flux_lower_ge1();     // |g><e1|, 3x3
ComplexMatrix flux_lower_e1e2();    // |e1><e2|, 3x3
ComplexMatrix flux_excitation();    // diag(0,1,1), 3x3

/// One rotating term of the interaction-picture Hamiltonian:
/// strength * (op e^{i detuning t} + op^dag e^{-i detuning t}).
struct InteractionTerm {
    double strength;
    double detuning;
    ComplexMatrix op;
    ComplexMatrix op_dag;
};

/// The five coupling terms of the interaction-picture Hamiltonian, built
/// once so repeated assembly at different times is cheap.
class InteractionTerms {
public:
    explicit InteractionTerms(const SystemParams& p);

    const FactorLayout& layout() const { return layout_; }
    const std::vector<InteractionTerm>& terms() const { return terms_; }
    std::size_t dim() const { return layout_.dim(); }

    ComplexMatrix assemble(double t) const;

private:
    FactorLayout layout_;
    std::vector<InteractionTerm> terms_;
};

/// Interaction-picture Hamiltonian at time t (dimension per layout, 48 for
/// the default truncation). Hermitian at every t.
ComplexMatrix full_hamiltonian(const SystemParams& p, double t);

/// Total excitation number n_a + n_b + atomic excitations + flux-qubit
/// weight (g=0, e1=1, e2=1). Commutes with the interaction Hamiltonian.
ComplexMatrix excitation_number(const FactorLayout& layout);

/// Diagonal frame generator K with [K, X_k] = detuning_k X_k for every
/// interaction term, so H(t) = e^{iKt} H(0) e^{-iKt} identically.
ComplexMatrix rotating_frame_generator(const SystemParams& p);

/// Anti-Hermitian generator of the dispersive frame transformation:
/// sum_k (strength_k / detuning_k (X_k - X_k^dag).
ComplexMatrix lambda_generator(const SystemParams& p);

/// sum_{k<=order} (1/k!) ad_lambda^k (H).
ComplexMatrix bch_effective(const ComplexMatrix& h, const ComplexMatrix& lambda, int order);

/// Human-readable violations of the tagged regime's validity conditions.
std::vector<std::string> regime_warnings(const SystemParams& p);

} // namespace fluxlink
