#include "revform/kernels.hpp"

#include <atomic>
#include <stdexcept>

#include <omp.h>

namespace revform::kernels {

namespace {

constexpr std::uint64_t kMaxWords = std::uint64_t{1} << 20;

std::uint64_t checked_count(std::size_t k, std::size_t length) {
    if (k < 1) throw std::invalid_argument("all_words_encounter: k must be >= 1");
    auto n = word_count(k, length);
    if (!n) throw std::length_error("all_words_encounter: more than 2^20 words");
    return *n;
}

// 1 = encounters, 0 = avoids; throws on an incomplete check.
bool encounters(const Formula& phi, const Word& w) {
    auto r = occurs(phi, w);
    if (r.status == SearchStatus::exhausted) throw std::runtime_error("all_words_encounter: occurrence check exhausted");
    return r.found();
}

}  // namespace

std::optional<std::uint64_t> word_count(std::size_t k, std::size_t length) {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < length; ++i) {
        n *= k;
        if (n > kMaxWords) return std::nullopt;
    }
    return n;
}

Word nth_word(std::uint64_t i, std::size_t k, std::size_t length) {
    std::vector<Letter> w(length);
    for (std::size_t p = length; p-- > 0;) {
        w[p] = alpha_letter(i % k);
        i /= k;
    }
    return Word(std::move(w));
}

bool all_words_encounter(const Formula& phi, std::size_t k, std::size_t length) {
    const std::uint64_t total = checked_count(k, length);
    std::atomic<bool> avoided{false};
    std::atomic<bool> failed{false};
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i) {
        if (avoided.load(std::memory_order_relaxed) || failed.load(std::memory_order_relaxed)) continue;
        try {
            if (!encounters(phi, nth_word(static_cast<std::uint64_t>(i), k, length))) avoided = true;
        } catch (const std::runtime_error&) {
            failed = true;
        }
    }
    // An avoider is definite even if another check ran out of steps.
    if (avoided) return false;
    if (failed) throw std::runtime_error("all_words_encounter: occurrence check exhausted");
    return true;
}

std::vector<Verdict> decide_batch(const std::vector<Formula>& formulas, const DecideOptions& opts, unsigned jobs) {
    std::vector<Verdict> out(formulas.size());
    std::vector<std::exception_ptr> errors(formulas.size());
    const int threads = jobs ? static_cast<int>(jobs) : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(formulas.size()); ++i) {
        try {
            out[i] = decide(formulas[i], opts);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

namespace serial {

bool all_words_encounter(const Formula& phi, std::size_t k, std::size_t length) {
    const std::uint64_t total = checked_count(k, length);
    bool failed = false;
    for (std::uint64_t i = 0; i < total; ++i) {
        try {
            if (!encounters(phi, nth_word(i, k, length))) return false;
        } catch (const std::runtime_error&) {
            failed = true;
        }
    }
    if (failed) throw std::runtime_error("all_words_encounter: occurrence check exhausted");
    return true;
}

std::vector<Verdict> decide_batch(const std::vector<Formula>& formulas, const DecideOptions& opts) {
    std::vector<Verdict> out;
    out.reserve(formulas.size());
    for (const auto& f : formulas) out.push_back(decide(f, opts));
    return out;
}

}  // namespace serial

}  // namespace revform::kernels
