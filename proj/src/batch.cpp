#include "planeham/batch.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "planeham/error.hpp"

namespace planeham {

CertificateBundle run_one(const PlaneGraph& g0, const std::string& id, Strategy strategy, const PipelineOptions& opt)
{
    CertificateBundle b;
    b.input_id = id;
    b.strategy = to_string(strategy);
    b.graph = g0;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        PipelineResult r = hamiltonian_pipeline(g0, strategy, opt);
        b.graph = std::move(r.graph);
        b.cycle = std::move(r.cycle.edges);
    } catch (const Error& e) {
        b.failure_kind = e.kind();
        b.failure = e.what();
    }
    b.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return b;
}

std::vector<CertificateBundle> run_batch(const std::vector<PlaneGraph>& inputs, const std::vector<std::string>& ids,
                                         Strategy strategy, int jobs, const PipelineOptions& opt)
{
    if (ids.size() != inputs.size()) fail(ErrorKind::invalid_input, "one id per input required");
    std::vector<CertificateBundle> out(inputs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < inputs.size(); i = next++) out[i] = run_one(inputs[i], ids[i], strategy, opt);
    };
    const int n = std::max(1, std::min<int>(jobs, static_cast<int>(inputs.size())));
    std::vector<std::thread> pool;
    for (int k = 1; k < n; ++k) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace planeham
