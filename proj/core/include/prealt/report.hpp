#pragma once

#include "prealt/tensor.hpp"

#include <functional>
#include <string>
#include <thread>
#include <utility>

namespace prealt {

// Sparse exact residual of any rank.
struct Residual {
    std::vector<std::size_t> shape;
    std::vector<std::pair<std::vector<std::size_t>, Scalar>> entries;

    static Residual of(const Vec& v);
    static Residual of(const Mat& m);
    static Residual of(const Tensor3& t);
    static Residual of(const Scalar& s);
    bool is_zero() const { return entries.empty(); }
};

struct Violation {
    std::string id;
    std::vector<std::size_t> witness;
    Residual residual;
};

struct CheckReport {
    bool passed = true;
    std::size_t violation_count = 0;
    std::vector<Violation> violations;  // first max_witnesses, in evaluation order
    bool truncated = false;
    std::vector<std::pair<std::string, bool>> flags;  // auxiliary verdicts (bijective, closed, ...)

    bool flag(const std::string& name) const;
    void set_flag(const std::string& name, bool value);
    // count of violations recorded under one identity id
    std::size_t count(const std::string& id) const;
    bool failed(const std::string& id) const { return count(id) > 0; }

    std::vector<std::pair<std::string, std::size_t>> per_id;  // id -> violation count, evaluation order
};

struct CheckOptions {
    std::size_t max_witnesses = 10;
    unsigned workers = 1;
};

// Collects violations for one witness position.
class Sink {
public:
    explicit Sink(std::size_t cap) : cap_(cap) {}
    template <class R>
    void check(const std::vector<std::size_t>& witness, const R& residual)
    {
        Residual r = Residual::of(residual);
        if (r.is_zero()) return;
        ++count_;
        if (kept_.size() < cap_) kept_.push_back({std::string(), witness, std::move(r)});
    }
    void flag(const std::vector<std::size_t>& witness, Residual r)
    {
        ++count_;
        if (kept_.size() < cap_) kept_.push_back({std::string(), witness, std::move(r)});
    }
    std::size_t count() const { return count_; }
    std::vector<Violation>& kept() { return kept_; }

private:
    std::size_t cap_;
    std::size_t count_ = 0;
    std::vector<Violation> kept_;
};

// Runs `body(i, sink)` for i in [0, outer) on opts.workers threads and merges the
// results in index order, so the report does not depend on the worker count.
void sweep(CheckReport& rep, const CheckOptions& opts, const std::string& id, std::size_t outer,
           const std::function<void(std::size_t, Sink&)>& body);

void finalize(CheckReport& rep);
// appends src's violations and counts to dst (ids are kept)
void merge_into(CheckReport& dst, const CheckReport& src, const CheckOptions& opts);

// all index tuples of given arity over [0, n), lexicographic
std::vector<std::vector<std::size_t>> index_tuples(std::size_t n, std::size_t arity);

}  // namespace prealt
