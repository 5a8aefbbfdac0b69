#pragma once

#include <json.hpp>
#include <optional>
#include <ostream>
#include <string>

#include "chiralwalk/document.hpp"
#include "chiralwalk/gauge.hpp"
#include "chiralwalk/time_symmetry.hpp"

namespace chiralwalk {

/// Machine-readable reports. Key order is fixed and nothing time- or
/// host-dependent is emitted, so equal inputs produce equal bytes.
nlohmann::ordered_json classify_report(const std::string& name,
                                       const HermitianMatrix& h,
                                       const Classification& c,
                                       const Tolerances& tol);

nlohmann::ordered_json invariants_report(const std::string& name,
                                         const HermitianMatrix& h,
                                         const Tolerances& tol);

nlohmann::ordered_json canon_report(const CanonicalForm& canon);

nlohmann::ordered_json equiv_report(
    const std::optional<DiagonalUnitary>& gauge);

/// CSV columns `t,s,f,P,J`; one row per pair s < f, or per ordered pair
/// (including the diagonal) when `full` is set.
void write_simulate_csv(std::ostream& os, const HermitianMatrix& h,
                        const std::vector<double>& grid,
                        std::optional<int> source, bool full);

/// CSV columns `t,s,f,re,im` of the amplitude current.
void write_amplitude_csv(std::ostream& os, const HermitianMatrix& h,
                         const std::vector<double>& grid,
                         std::optional<int> source, bool full);

/// CSV columns `t,s,f,current` of the stochastic current.
void write_stochastic_csv(std::ostream& os, const StochasticGenerator& s,
                          const std::vector<double>& grid,
                          std::optional<int> source, bool full);

}  // namespace chiralwalk
