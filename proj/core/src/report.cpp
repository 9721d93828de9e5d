#include "prealt/report.hpp"

#include <algorithm>

namespace prealt {

Residual Residual::of(const Vec& v)
{
    Residual r;
    r.shape = {v.size()};
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) r.entries.push_back({{i}, v[i]});
    return r;
}

Residual Residual::of(const Mat& m)
{
    Residual r;
    r.shape = {m.rows(), m.cols()};
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) r.entries.push_back({{i, j}, m(i, j)});
    return r;
}

Residual Residual::of(const Tensor3& t)
{
    Residual r;
    r.shape = {t.dim(), t.dim(), t.dim()};
    for (auto& [i, j, k, v] : t.nonzeros()) r.entries.push_back({{i, j, k}, v});
    return r;
}

Residual Residual::of(const Scalar& s)
{
    Residual r;
    if (!s.is_zero()) r.entries.push_back({{}, s});
    return r;
}

bool CheckReport::flag(const std::string& name) const
{
    for (const auto& [k, v] : flags)
        if (k == name) return v;
    return false;
}

void CheckReport::set_flag(const std::string& name, bool value)
{
    for (auto& [k, v] : flags)
        if (k == name) {
            v = value;
            return;
        }
    flags.emplace_back(name, value);
}

std::size_t CheckReport::count(const std::string& id) const
{
    for (const auto& [k, v] : per_id)
        if (k == id) return v;
    return 0;
}

static void add_count(CheckReport& rep, const std::string& id, std::size_t c)
{
    for (auto& [k, v] : rep.per_id)
        if (k == id) {
            v += c;
            return;
        }
    rep.per_id.emplace_back(id, c);
}

void sweep(CheckReport& rep, const CheckOptions& opts, const std::string& id, std::size_t outer,
           const std::function<void(std::size_t, Sink&)>& body)
{
    std::size_t cap = opts.max_witnesses;
    std::vector<Sink> sinks(outer, Sink(cap));
    unsigned workers = std::max(1u, opts.workers);
    if (workers == 1 || outer < 2) {
        for (std::size_t i = 0; i < outer; ++i) body(i, sinks[i]);
    } else {
        std::size_t nthreads = std::min<std::size_t>(workers, outer);
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(nthreads);
        for (std::size_t t = 0; t < nthreads; ++t)
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t i = t; i < outer; i += nthreads) body(i, sinks[i]);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    std::size_t total = 0;
    for (auto& s : sinks) {
        total += s.count();
        for (auto& v : s.kept()) {
            if (rep.violations.size() >= cap) break;
            v.id = id;
            rep.violations.push_back(std::move(v));
        }
    }
    rep.violation_count += total;
    add_count(rep, id, total);
    finalize(rep);
}

void finalize(CheckReport& rep)
{
    rep.passed = rep.violation_count == 0;
    rep.truncated = rep.violation_count > rep.violations.size();
}

void merge_into(CheckReport& dst, const CheckReport& src, const CheckOptions& opts)
{
    for (const auto& v : src.violations)
        if (dst.violations.size() < opts.max_witnesses) dst.violations.push_back(v);
    dst.violation_count += src.violation_count;
    for (const auto& [k, c] : src.per_id) add_count(dst, k, c);
    for (const auto& [k, v] : src.flags) dst.set_flag(k, v);
    finalize(dst);
}

std::vector<std::vector<std::size_t>> index_tuples(std::size_t n, std::size_t arity)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(arity, 0);
    if (arity == 0) return {{}};
    if (n == 0) return out;
    while (true) {
        out.push_back(cur);
        std::size_t pos = arity;
        while (pos > 0) {
            --pos;
            if (++cur[pos] < n) break;
            cur[pos] = 0;
            if (pos == 0) return out;
        }
    }
}

}  // namespace prealt
