#include <doctest.h>

#include <bit>
#include <set>
#include <string>

#include "hullspec/catalog.hpp"
#include "hullspec/certify.hpp"
#include "hullspec/configuration.hpp"
#include "hullspec/error.hpp"
#include "hullspec/limit_set.hpp"
#include "hullspec/subshift.hpp"

using namespace hullspec;

namespace {

// Fibonacci word by string rewriting a -> ab, b -> a.
std::string fibonacci_word(std::size_t min_length) {
    std::string w = "a";
    while (w.size() < min_length) {
        std::string next;
        for (char c : w) next += c == 'a' ? "ab" : "a";
        w = next;
    }
    return w;
}

// Thue-Morse word from the binary digit-sum parity.
std::string thue_morse_word(std::size_t length) {
    std::string w;
    for (std::size_t i = 0; i < length; ++i) w += std::popcount(i) % 2 ? 'b' : 'a';
    return w;
}

std::vector<std::string> distinct_factors(const std::string& w, std::size_t n) {
    std::set<std::string> out;
    for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(w.substr(i, n));
    return {out.begin(), out.end()};
}

// Letter-index words back to letter names.
std::vector<std::string> named(const std::vector<std::string>& words, const Alphabet& alphabet) {
    std::vector<std::string> out;
    for (const auto& w : words) {
        std::string s;
        for (char c : w) s += alphabet.name(static_cast<Letter>(c));
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string letters_of(const Configuration& omega, std::int64_t from, std::int64_t to) {
    std::string s;
    for (std::int64_t k = from; k <= to; ++k) s += omega.alphabet().name(omega.evaluate(GroupElement::lattice({k})));
    return s;
}

} // namespace

TEST_CASE("fibonacci substitution data") {
    const Substitution s = fibonacci_substitution();
    CHECK(s.incidence_matrix() == IncidenceMatrix{{1, 1}, {1, 0}});
    const auto w = s.primitivity();
    REQUIRE(w);
    CHECK(w->power == 2);
    CHECK(w->matrix == IncidenceMatrix{{2, 1}, {1, 1}});
    // |image^n(a)| runs through the Fibonacci numbers.
    std::uint64_t f0 = 1, f1 = 2;
    for (std::size_t n = 1; n < 40; ++n) {
        CHECK(s.length(0, n) == f1);
        const auto f2 = f0 + f1;
        f0 = f1;
        f1 = f2;
    }
    CHECK(s.iterate({0}, 5) == Word{0, 1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 1});
}

TEST_CASE("thue-morse substitution is primitive at power one") {
    const auto w = thue_morse_substitution().primitivity();
    REQUIRE(w);
    CHECK(w->power == 1);
    CHECK(w->matrix == IncidenceMatrix{{1, 1}, {1, 1}});
}

TEST_CASE("non-primitive substitution") {
    const Substitution s(2, {{0, 0}, {1}});
    CHECK_FALSE(s.primitivity());
    CHECK(multiply({{1, 2}, {0, 1}}, {{1, 0}, {3, 1}}) == IncidenceMatrix{{7, 2}, {3, 1}});
}

TEST_CASE("fibonacci fixed point") {
    const Hull h = make_hull("fibonacci");
    const std::string oracle = fibonacci_word(400);
    CHECK(letters_of(h.reference, 0, 299) == oracle.substr(0, 300));
    CHECK(letters_of(h.reference, -1, 0) == "aa");
}

TEST_CASE("thue-morse fixed point") {
    const Hull h = make_hull("thue_morse");
    CHECK(letters_of(h.reference, 0, 255) == thue_morse_word(256));
    CHECK(letters_of(h.reference, -1, -1) == "b");
}

TEST_CASE("factor sets match the generated words") {
    const std::string fib = fibonacci_word(20000);
    const std::string tm = thue_morse_word(1 << 15);
    const Hull fh = make_hull("fibonacci");
    const Hull th = make_hull("thue_morse");
    for (std::size_t n = 1; n <= 30; ++n) {
        const auto f = named(fh.subshift.factors(n), fh.alphabet);
        CHECK(f.size() == n + 1);  // Sturmian complexity
        CHECK(f == distinct_factors(fib, n));
        CHECK(named(th.subshift.factors(n), th.alphabet) == distinct_factors(tm, n));
    }
}

TEST_CASE("legal patterns on Z agree with factors") {
    const Hull h = make_hull("fibonacci");
    const Window w = Window::interval(h.group, 5, 7);
    const auto patterns = h.subshift.legal_patterns(w);
    REQUIRE(patterns.size() == 8);
    std::vector<std::string> words;
    for (const auto& p : patterns) words.push_back(p.to_string(h.alphabet));
    std::sort(words.begin(), words.end());
    CHECK(words == named(h.subshift.factors(7), h.alphabet));
}

TEST_CASE("full shift and periodic hull pattern counts") {
    const Hull full = make_hull("full_pm1", HullParams{2, 2, false, {}});
    CHECK(full.subshift.legal_patterns(Window::ball(full.group, 1)).size() == 32);
    const Hull per = make_hull("period_q", HullParams{3, 1, false, {}});
    CHECK(per.subshift.legal_patterns(Window::interval(per.group, 0, 10)).size() == 3);
    const Hull per2 = make_hull("period_q", HullParams{2, 2, false, {}});
    CHECK(per2.subshift.legal_patterns(Window::box(per2.group, {0, 0}, {2, 2})).size() == 2);
}

TEST_CASE("halfplane hull patterns are the translates of the reference") {
    const Hull h = make_hull("halfplane_ab");
    const Window box = Window::box(h.group, {0, 0}, {2, 1});
    std::set<Pattern> oracle;
    for (std::int64_t x = -5; x <= 5; ++x)
        for (std::int64_t y = -2; y <= 2; ++y) oracle.insert(pattern_at(h.reference, box, GroupElement::lattice({x, y})));
    const auto legal = h.subshift.legal_patterns(box);
    CHECK(std::vector<Pattern>(oracle.begin(), oracle.end()) == legal);
    CHECK(legal.size() == 4);
}

TEST_CASE("product metric") {
    const Hull h = make_hull("full_pm1");
    const Configuration& omega = h.reference;
    CHECK(metric_distance(omega, omega, 10).value == 0.0);
    const Configuration flipped = Configuration::patched(omega, {{h.group.identity(), omega.evaluate(h.group.identity()) ? Letter{0} : Letter{1}}});
    CHECK(metric_distance(omega, flipped, 10).value == 1.0);
    // On Z the tail past M is sum_{r > M} 2 * 2^{-r} = 2^{1-M}.
    CHECK(metric_distance(omega, flipped, 10).tail_bound == doctest::Approx(std::ldexp(1.0, -9)));
    const auto d = metric_distance(omega, shift(omega, GroupElement::lattice({1})), 12);
    CHECK(d.value > 0.0);
    CHECK(d.value == metric_distance(shift(omega, GroupElement::lattice({1})), omega, 12).value);
    CHECK_THROWS_AS(metric_distance(make_hull("full_pm1", HullParams{2, 1, true, {}}).reference,
                                    make_hull("full_pm1", HullParams{2, 1, true, {}}).reference, 2),
                    DomainError);
}

TEST_CASE("counter-based generator is pinned") {
    // First outputs of SplitMix64 started from state 0 and 1.
    CHECK(mix64(0) == 0xe220a8397b1dcdafULL);
    CHECK(mix64(0x9e3779b97f4a7c15ULL) == 0x6e789e6aa1b965f4ULL);
    const Configuration a = Configuration::explicit_random(GroupSpec::lattice(1), make_hull("full_pm1").alphabet, 7);
    const Configuration b = Configuration::explicit_random(GroupSpec::lattice(1), make_hull("full_pm1").alphabet, 7);
    std::size_t ones = 0;
    for (std::int64_t k = -500; k < 500; ++k) {
        const auto g = GroupElement::lattice({k});
        CHECK(a.evaluate(g) == b.evaluate(g));
        CHECK(a.evaluate(g) == (position_hash(7, g) >> 32) % 2);
        ones += a.evaluate(g);
    }
    CHECK(ones > 430);
    CHECK(ones < 570);
}

TEST_CASE("shift action") {
    const Hull h = make_hull("full_pm1", HullParams{2, 1, true, {}});
    const auto g = GroupElement::heisenberg(1, 2, -1);
    const auto k = GroupElement::heisenberg(-3, 0, 2);
    const Configuration s = shift(h.reference, g);
    const Window ball = Window::ball(h.group, 3);
    for (const auto& x : ball.elements()) CHECK(s.evaluate(x) == h.reference.evaluate(compose(x, g)));
    CHECK(shift(s, k).evaluate(h.group.identity()) == h.reference.evaluate(compose(k, g)));
}

TEST_CASE("fibonacci hull is certified minimal") {
    const auto cert = certify_minimal(make_hull("fibonacci").subshift, 6, 200);
    CHECK(cert.certified);
    CHECK(cert.legal_small == 7);
    CHECK(cert.legal_big == 201);
    REQUIRE(cert.primitivity);
    CHECK(cert.primitivity->matrix == IncidenceMatrix{{2, 1}, {1, 1}});
}

TEST_CASE("full shift is refuted minimal by a constant pattern") {
    const Hull h = make_hull("full_pm1");
    const auto cert = certify_minimal(h.subshift, 1, 3);
    CHECK_FALSE(cert.certified);
    REQUIRE(cert.witness);
    const auto& letters = cert.witness->letters;
    CHECK(std::all_of(letters.begin(), letters.end(), [&](Letter a) { return a == letters.front(); }));
    REQUIRE(cert.missing.size() == 1);
    CHECK(cert.missing.front().letters.front() != letters.front());
}

TEST_CASE("halfplane hull is not minimal") {
    CHECK_FALSE(certify_minimal(make_hull("halfplane_ab").subshift, 1, 3).certified);
}

TEST_CASE("pseudoergodicity searches") {
    const Hull fib = make_hull("fibonacci");
    for (std::int64_t s : {0, 1000, -1234}) {
        const auto cert = certify_pseudoergodic(shift(fib.reference, GroupElement::lattice({s})), fib.subshift, 6, 500);
        CHECK(cert.status == SearchStatus::certified);
        CHECK(cert.occurrences.size() == 7);
        for (const auto& [pattern, where] : cert.occurrences) CHECK(fib.group.word_length(where) >= 6);
    }
    const Hull full = make_hull("full_pm1");
    const Configuration random = realize(full, ConfigurationSpec{"explicit", 1, {}, {}});
    CHECK(certify_pseudoergodic(random, full.subshift, 3, 200).status == SearchStatus::certified);
    // Too small a radius for a random configuration proves nothing.
    CHECK(certify_pseudoergodic(random, full.subshift, 8, 10).status == SearchStatus::inconclusive);
    // A constant point of the full shift never shows the other letter.
    const Configuration constant = realize(full, ConfigurationSpec{"constant", {}, std::string("1"), {}});
    CHECK(certify_pseudoergodic(constant, full.subshift, 1, 20).status == SearchStatus::refuted);
    // A periodic point is pseudoergodic inside its own orbit closure.
    const Hull per = make_hull("period_q", HullParams{3, 1, false, {}});
    CHECK(certify_pseudoergodic(per.reference, per.subshift, 4, 30).status == SearchStatus::certified);
}

TEST_CASE("catalog realizations") {
    const Hull fib = make_hull("fibonacci");
    CHECK_THROWS_AS(realize(fib, ConfigurationSpec{"explicit", 3, {}, {}}), DomainError);
    CHECK_THROWS_AS(realize(fib, ConfigurationSpec{"constant", {}, std::string("b"), {}}), DomainError);
    CHECK_THROWS_AS(realize(fib, ConfigurationSpec{"reference", {}, {}, {1, 2}}), DomainError);
    CHECK_THROWS_AS(make_hull("nonexistent"), DomainError);
    CHECK_THROWS_AS(make_hull("period_q", HullParams{0, 1, false, {}}), DomainError);
    const Hull hp = make_hull("halfplane_ab");
    const Configuration a = realize(hp, ConfigurationSpec{"constant", {}, std::string("a"), {}});
    CHECK(a.evaluate(GroupElement::lattice({-9, 4})) == 0);
    const Configuration moved = realize(fib, ConfigurationSpec{"reference", {}, {}, {3}});
    CHECK(moved.evaluate(GroupElement::lattice({0})) == fib.reference.evaluate(GroupElement::lattice({3})));
}

TEST_CASE("limit sets of the half-plane configuration") {
    const Hull h = make_hull("halfplane_ab");
    const Window w = Window::ball(h.group, 2);
    std::vector<EscapeSequence> seqs{
        arithmetic_sequence(GroupElement::lattice({0, 0}), GroupElement::lattice({25, 1}), 6, std::vector<double>{1, 0}),
        arithmetic_sequence(GroupElement::lattice({0, 5}), GroupElement::lattice({-25, 0}), 6, std::vector<double>{-1, 0})};
    const LimitSetSample sample = sample_limit_set(h.reference, w, seqs);
    REQUIRE(sample.probes.size() == 2);
    for (const auto& p : sample.probes) CHECK(p.stabilized);
    const auto right = sample.directional({1, 0});
    const auto left = sample.directional({-1, 0});
    REQUIRE(right.size() == 1);
    REQUIRE(left.size() == 1);
    CHECK(std::all_of(right[0].letters.begin(), right[0].letters.end(), [](Letter a) { return a == 0; }));
    CHECK(std::all_of(left[0].letters.begin(), left[0].letters.end(), [](Letter a) { return a == 1; }));
    CHECK(sample.patterns().size() == 2);
}

TEST_CASE("occurrence sequences realize every fibonacci word") {
    const Hull fib = make_hull("fibonacci");
    const Window w = Window::ball(fib.group, 4);
    for (const auto& target : fib.subshift.legal_patterns(w)) {
        const EscapeSequence seq = occurrence_sequence(fib.reference, target, 4, 100, 3000);
        REQUIRE(seq.terms.size() == 4);
        for (const auto& g : seq.terms) {
            CHECK(pattern_at(fib.reference, w, g) == target);
            CHECK(fib.group.word_length(g) >= 100);
        }
    }
    const Hull per = make_hull("period_q", HullParams{2, 1, false, {}});
    const Pattern impossible{Window::interval(per.group, 0, 2), {0, 0}};
    CHECK(occurrence_sequence(per.reference, impossible, 2, 0, 50).terms.empty());
}
