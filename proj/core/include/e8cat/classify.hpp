#pragma once

#include "e8cat/group_elem.hpp"

#include <map>
#include <mutex>

namespace e8cat {

struct NotNormalizing : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnclassifiedInvolution : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OrbitInfo {
    std::string group;     // E8 | E7 | E6 | F4
    std::string label;     // identity, pole, fixed, EIX, EVIII, EV, EVI, ... FI, FII
    std::string orbit_id;  // label with the conjugate-orbit index, e.g. EVII_2
    size_t ambient_dplus = 0;
    size_t restricted_dplus = 0;
};

/// Orbit classification of catalog involutions under conjugation by
/// H in {F4, E6, E7, E8}: the symmetric-space type is decided by the fixed
/// dimension of Ad(g) restricted to h (the dimension table of the exceptional
/// involutive automorphisms); orbits sharing a type are separated by the
/// restriction of Ad(g) to the defining subalgebra of H (su2 / su3 / g2),
/// which is constant on each orbit within the catalog, with reference
/// elements naming each class. EVI orbits carry the e8-level dimension as a
/// secondary tag (136 inside EIX, 120 inside EVIII).
class Classifier {
  public:
    explicit Classifier(unsigned workers = 2) : workers_(workers) {}

    OrbitInfo classify(const E8GroupElem& g, const std::string& group) const;
    size_t ambient_dplus(const E8GroupElem& g) const;
    /// d_plus of Ad(g) restricted to a named subalgebra.
    size_t fixed_dim_in(const E8GroupElem& g, const std::string& subalgebra) const;

    std::map<std::string, size_t> orbit_histogram(const std::vector<E8GroupElem>& set,
                                                  const std::string& group) const;

    /// Restriction matrix of Ad(g) to a named subalgebra (throws
    /// NotNormalizing if the subalgebra is not preserved).
    ExactMatrix restrict_adjoint(const E8GroupElem& g, const std::string& subalgebra) const;

    unsigned workers() const { return workers_; }

  private:
    static std::string signature_of(const ExactMatrix& adjoint, const std::string& sub);
    const std::map<std::string, std::string>& reference_signatures(const std::string& group) const;

    unsigned workers_;
    mutable std::mutex mu_;
    mutable std::map<std::string, size_t> ambient_cache_;
    mutable std::map<std::string, OrbitInfo> classify_cache_;
    mutable std::map<std::string, std::map<std::string, std::string>> ref_cache_;
};

/// Oracle pairing the combinatorial root-count formulas with the concrete
/// matrices, for a torus-or-x encoded element: both backends must agree on
/// e8 and on every listed slice subsystem.
struct BackendCheckResult {
    bool ok = true;
    std::vector<std::string> mismatches;  // "ambient: combinatorial=..., matrix=..."
};
BackendCheckResult backend_consistency_check(const Classifier& cl, const E8GroupElem& g);

}  // namespace e8cat
