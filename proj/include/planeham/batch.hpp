#pragma once

#include <string>
#include <vector>

#include "planeham/hamiltonian.hpp"
#include "planeham/io.hpp"

namespace planeham {

/// Runs the pipeline on every input with `jobs` worker threads. Results come
/// back in input order; failures are recorded in the bundle, not thrown.
std::vector<CertificateBundle> run_batch(const std::vector<PlaneGraph>& inputs, const std::vector<std::string>& ids,
                                         Strategy strategy, int jobs, const PipelineOptions& opt = {});

/// One pipeline run packed as a bundle.
CertificateBundle run_one(const PlaneGraph& g0, const std::string& id, Strategy strategy, const PipelineOptions& opt);

}  // namespace planeham
