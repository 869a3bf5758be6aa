#include <catch2/catch_amalgamated.hpp>

#include <hstap/nfa.hpp>

#include "testutil.hpp"

using namespace hstap;

TEST_CASE("translate(true) is one accepting state with a true self-loop") {
    Nfa a = translate(Formula::True());
    CHECK(a.state_count == 1);
    CHECK(a.initial == std::vector<int>{0});
    CHECK(a.accepting == std::vector<int>{0});
    REQUIRE(a.transitions.size() == 1);
    CHECK(a.transitions[0].from == 0);
    CHECK(a.transitions[0].to == 0);
    CHECK(a.transitions[0].guard == Formula::True());
}

TEST_CASE("translate agrees with evaluate on the corpus") {
    std::vector<std::string> texts = testutil::synthetic_formula_texts();
    for (const auto& text : texts) {
        Formula f = parse_formula(text);
        Nfa a = translate(f);
        auto props = propositions(f);
        std::vector<std::string> plist(props.begin(), props.end());
        auto symbols = testutil::all_symbols(plist);
        testutil::for_each_word(symbols, 4, [&](const Word& w) {
            bool lhs = accepts(a, w);
            bool rhs = evaluate(f, w, 0);
            if (lhs != rhs) {
                CAPTURE(text, testutil::word_to_string(w));
                REQUIRE(lhs == rhs);
            }
        });
    }
}

TEST_CASE("translate examples from the task family") {
    Nfa a = translate(parse_formula("F (s_a && F t_a)"));
    CHECK(accepts(a, {make_symbol({"s_a"}), make_symbol({"t_a"})}));
    CHECK_FALSE(accepts(a, {make_symbol({"t_a"}), make_symbol({"s_a"})}));
}

TEST_CASE("translate state cap reported as a limit error") {
    Formula f = parse_formula("F (a && F (b && F c))");
    CHECK_THROWS_AS(translate(f, 2), LimitError);
}

TEST_CASE("acceptance examples") {
    Nfa ev_a = translate(parse_formula("F a"));
    CHECK(accepts(ev_a, {make_symbol({"a"})}));

    Nfa both = translate(parse_formula("F a && F b"));
    CHECK(accepts(both, {make_symbol({"b"}), make_symbol({"a"})}));

    Nfa until = translate(parse_formula("a U b"));
    CHECK_FALSE(accepts(until, {make_symbol({}), make_symbol({"b"})}));
}

TEST_CASE("language containment") {
    Nfa nested = translate(parse_formula("F (a && F b)"));
    Nfa both = translate(parse_formula("F a && F b"));
    Nfa ev_a = translate(parse_formula("F a"));
    CHECK(language_subset(nested, both));
    CHECK(language_subset(ev_a, ev_a));
    CHECK_FALSE(language_subset(both, nested)); // witness {b}{a}
}

TEST_CASE("language containment agrees with word enumeration") {
    auto symbols = testutil::all_symbols({"a", "b"});
    std::vector<std::string> texts = {"F a", "F b", "F a && F b", "F (a && F b)",
                                      "a U b", "G !b", "F (a && b)"};
    for (const auto& ta : texts) {
        for (const auto& tb : texts) {
            Nfa a = translate(parse_formula(ta));
            Nfa b = translate(parse_formula(tb));
            bool exact = language_subset(a, b);
            bool bounded = true;
            testutil::for_each_word(symbols, 4, [&](const Word& w) {
                if (accepts(a, w) && !accepts(b, w)) bounded = false;
            });
            if (exact) CHECK(bounded);
            if (!bounded) CHECK_FALSE(exact);
        }
    }
}

TEST_CASE("empty language detection") {
    CHECK(language_empty(translate(Formula::False())));
    CHECK_FALSE(language_empty(translate(parse_formula("F a"))));
    CHECK(language_empty(translate(parse_formula("a && !a"))));
}

TEST_CASE("decomposition set of order-free conjunction includes middle states") {
    Nfa a = translate(parse_formula("F a && F b"));
    REQUIRE(a.state_count == 4);
    DecompositionSet d = decomposition_set(a);
    CHECK(d.states.size() == 4); // initial, accepting, and both intermediates
}

TEST_CASE("decomposition set of F a is trivial") {
    Nfa a = translate(parse_formula("F a"));
    DecompositionSet d = decomposition_set(a);
    CHECK(d.states.size() == static_cast<std::size_t>(a.state_count));
    for (int q : d.states) CHECK((a.is_initial(q) || a.is_accepting(q)));
}

TEST_CASE("decomposition set of sequenced conjunction excludes the middle") {
    Nfa a = translate(parse_formula("F (a && F b)"));
    DecompositionSet d = decomposition_set(a);
    for (int q : d.states) CHECK((a.is_initial(q) || a.is_accepting(q)));
    CHECK(d.states.size() < static_cast<std::size_t>(a.state_count));
}

TEST_CASE("decomposition swap matches brute force on small automata") {
    int compared = 0;
    for (const auto& text : testutil::synthetic_formula_texts()) {
        Formula f = parse_formula(text);
        Nfa a = translate(f);
        if (a.state_count > 8) continue;
        auto reach = hstap::detail::reachable_states(a);
        auto coreach = hstap::detail::coreachable_states(a);
        for (int q = 0; q < a.state_count; ++q) {
            if (!reach[q] || !coreach[q]) continue;
            bool exact = decomposition_swap_holds(a, q);
            bool brute = testutil::swap_check_bruteforce(a, q, 3);
            ++compared;
            if (exact != brute) {
                CAPTURE(text, q);
                REQUIRE(exact == brute);
            }
        }
    }
    CHECK(compared > 20);
}

TEST_CASE("decomposition set contains initial and co-reachable accepting states") {
    for (const auto& text : {"F a && F b", "F (a && F b)", "a U b", "G !b && F a"}) {
        Nfa a = translate(parse_formula(text));
        DecompositionSet d = decomposition_set(a);
        auto reach = hstap::detail::reachable_states(a);
        auto coreach = hstap::detail::coreachable_states(a);
        for (int q = 0; q < a.state_count; ++q) {
            if (a.is_initial(q) && reach[q]) CHECK(d.contains(q));
            if (a.is_accepting(q) && coreach[q]) CHECK(d.contains(q));
        }
    }
}

TEST_CASE("progress metric") {
    Nfa fig = translate(parse_formula("F a && F b"));
    REQUIRE(fig.state_count == 4);
    for (int q : fig.initial) CHECK(progress_metric(fig, q) == 0);
    // Accepting state: longest simple path initial -> intermediate -> accept.
    for (int q : fig.accepting) CHECK(progress_metric(fig, q) == 2);

    Nfa chain;
    chain.alphabet = {"a"};
    chain.state_count = 5;
    chain.initial = {0};
    chain.accepting = {4};
    for (int i = 0; i + 1 < 5; ++i)
        chain.transitions.push_back({i, Formula::Prop("a"), i + 1});
    CHECK(progress_metric(chain, 4) == 4);
    CHECK_THROWS_AS(progress_metric(translate(parse_formula("F a")), 99), std::out_of_range);
}

TEST_CASE("progress metric is zero exactly on initial states") {
    for (const auto& text : {"F a && F b", "F (a && F b)", "a U b", "F (a && X b)"}) {
        Nfa a = translate(parse_formula(text));
        auto metric = progress_metric_all(a);
        for (int q = 0; q < a.state_count; ++q) {
            if (metric[q] < 0) continue; // unreachable
            CHECK((metric[q] == 0) == a.is_initial(q));
        }
    }
}

TEST_CASE("DOT export shades decomposition states") {
    Nfa a = translate(parse_formula("F a && F b"));
    DecompositionSet d = decomposition_set(a);
    std::string dot = to_dot(a, &d);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("fillcolor=gray80") != std::string::npos);
    CHECK(dot.find("doublecircle") != std::string::npos);
}
