#pragma once

#include <functional>
#include <memory>
#include <mutex>

#include "hg1111/euler.hpp"

namespace hg {

struct NewformRecord {
    std::string label;  // level.weight.char.orbit
    long long level = 0;
    int weight = 4;
    std::map<long long, long long> ap;

    long long parse_level() const;
};

// Where newform data comes from: a fixture/cache directory of JSON files,
// optionally backed by the remote database.
struct LmfdbConfig {
    std::string cache_dir = "tests/fixtures/newforms";
    std::string base_url;     // empty = offline only
    int request_delay_ms = 500;
    long long level_bound = 2000;
};

class LmfdbClient {
  public:
    explicit LmfdbClient(LmfdbConfig cfg);

    // weight-4 rational newforms at one level; throws if unavailable offline
    std::vector<NewformRecord> fetch_newforms(long long level);

    // number of network requests issued (for the cache contract tests)
    long long network_requests() const { return requests_; }

    struct MatchResult {
        std::optional<NewformRecord> form;
        bool ambiguous = false;
    };
    // unique newform agreeing with all supplied good-prime coefficients,
    // searched over levels whose prime support divides `support`
    MatchResult match_form(const std::vector<EulerFactorData>& aps,
                           const std::vector<long long>& support_primes);

  private:
    LmfdbConfig cfg_;
    std::mutex mu_;
    std::map<long long, std::vector<NewformRecord>> cache_;
    long long requests_ = 0;

    std::optional<std::vector<NewformRecord>> load_level_file(long long level);
};

// candidate levels <= bound with prime support inside `primes`
std::vector<long long> candidate_levels(const std::vector<long long>& primes, long long bound);

std::vector<long long> prime_support(const GammaVector& g);

}  // namespace hg
