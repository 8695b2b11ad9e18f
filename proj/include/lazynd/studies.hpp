#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pflp.hpp"

namespace lazynd::studies {

// ---- dice ----

enum class Side { one = 1, two, three, four, five, six };

inline Dist<Side> die() {
    return uniform(std::vector<Side>{Side::one, Side::two, Side::three, Side::four, Side::five, Side::six});
}

inline Eff<bool> is_six(const Eff<Side>& s) {
    return lift1([](Side v) { return v == Side::six; }, s);
}

inline Eff<bool> is_five_or_six(const Eff<Side>& s) {
    return lift1([](Side v) { return v == Side::five || v == Side::six; }, s);
}

inline Dist<LiftedList<Side>> dice(std::size_t n, BindMode mode = BindMode::lazy) {
    return replicate_dist<Side>(n, die, mode);
}

inline QueryResult all_six(std::size_t n, BindMode mode = BindMode::lazy, const SearchConfig& config = {}) {
    Predicate<LiftedList<Side>> p = [](const ListEff<Side>& xs) { return all_of<Side, ND>(is_six, xs); };
    return query_stats(p, dice(n, mode), config);
}

inline QueryResult all_five_or_six(std::size_t n, BindMode mode = BindMode::lazy, const SearchConfig& config = {}) {
    Predicate<LiftedList<Side>> p = [](const ListEff<Side>& xs) { return all_of<Side, ND>(is_five_or_six, xs); };
    return query_stats(p, dice(n, mode), config);
}

// ---- wet grass ----

struct GrassModel {
    Eff<bool> raining;
    Eff<bool> sprinkler;
    Eff<bool> grass_wet;
};

inline Dist<bool> raining() { return flip(0.2); }

inline Dist<bool> sprinkler_on(const Eff<bool>& rain) {
    return bind(rain, [](bool r) { return r ? flip(0.01) : flip(0.4); });
}

inline Dist<bool> grass_wet(const Eff<bool>& sprinkler, const Eff<bool>& rain) {
    return bind(sprinkler, [rain](bool s) {
        return bind(rain, [s](bool r) {
            if (!s && !r)
                return flip(0.0);
            if (!s && r)
                return flip(0.8);
            if (s && !r)
                return flip(0.9);
            return flip(0.99);
        });
    });
}

inline Dist<GrassModel> grass_model(BindMode mode = BindMode::lazy) {
    return dist_bind(
        raining(),
        [mode](const Eff<bool>& r) {
            return dist_bind(
                sprinkler_on(r),
                [r, mode](const Eff<bool>& s) {
                    return dist_bind(
                        grass_wet(s, r),
                        [r, s](const Eff<bool>& g) { return certainly(pure(GrassModel{r, s, g})); }, mode);
                },
                mode);
        },
        mode);
}

inline Eff<bool> is_raining(const Eff<GrassModel>& m) {
    return bind(m, [](const GrassModel& v) { return v.raining; });
}

inline Eff<bool> is_grass_wet(const Eff<GrassModel>& m) {
    return bind(m, [](const GrassModel& v) { return v.grass_wet; });
}

inline Eff<bool> is_sprinkler_on(const Eff<GrassModel>& m) {
    return bind(m, [](const GrassModel& v) { return v.sprinkler; });
}

inline QueryResult grass_wet_and_rain(const SearchConfig& config = {}) {
    return all_prob_stats<GrassModel>({is_grass_wet, is_raining}, grass_model(), config);
}

inline QueryResult grass_wet_prob(const SearchConfig& config = {}) {
    return query_stats<GrassModel>(is_grass_wet, grass_model(), config);
}

// P(rain | grass wet)
inline QueryResult rain_given_wet(const SearchConfig& config = {}) {
    return cond_prob_stats<GrassModel>({is_raining}, {is_grass_wet}, grass_model(), config);
}

// ---- random strings ----

inline Dist<char> pick_char() { return uniform(std::vector<char>{'a', 'b'}); }

inline Dist<LiftedList<char>> random_string(std::size_t n) { return replicate_dist<char>(n, pick_char); }

inline Eff<bool> palindrome(const ListEff<char>& s) { return list_equal(s, reverse(s)); }

// [] -> False; 'b':'b':_ -> True; _:bs -> consecutiveBs bs
inline Eff<bool> consecutive_bs(const ListEff<char>& s) {
    return bind(s, [](const LiftedList<char>& l) {
        if (l.is_nil())
            return pure(false);
        return bind(l.head(), [rest = l.tail()](char c) {
            if (c != 'b')
                return consecutive_bs(rest);
            return bind(rest, [rest](const LiftedList<char>& r) {
                if (r.is_nil())
                    return pure(false);
                return bind(r.head(), [rest](char d) { return d == 'b' ? pure(true) : consecutive_bs(rest); });
            });
        });
    });
}

inline QueryResult palindrome_prob(std::size_t n, const SearchConfig& config = {}) {
    return query_stats<LiftedList<char>>(palindrome, random_string(n), config);
}

inline QueryResult consecutive_bs_prob(std::size_t n, const SearchConfig& config = {}) {
    return query_stats<LiftedList<char>>(consecutive_bs, random_string(n), config);
}

// ---- secret santa ----

using Person = int;
using Hat = std::vector<Person>;

struct Assignment {
    Person santa;
    Person person;
    friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct Game {
    bool failed = false;
    std::vector<Assignment> assignments;
};

struct Pick {
    Assignment assignment;
    Hat rest;
};

using MaybePick = std::optional<Pick>;

enum class SantaVariant { naive, no_self_pick, pick_and_check, repeat };

inline std::string_view variant_name(SantaVariant v) {
    switch (v) {
    case SantaVariant::naive: return "naive";
    case SantaVariant::no_self_pick: return "no-self-pick";
    case SantaVariant::pick_and_check: return "pick-and-check";
    case SantaVariant::repeat: return "repeat";
    }
    return "?";
}

inline Hat remove_one(Hat hat, Person p) {
    auto it = std::find(hat.begin(), hat.end(), p);
    if (it != hat.end())
        hat.erase(it);
    return hat;
}

// p draws a name from the hat (Nothing when the hat is empty).
inline Dist<MaybePick> p_picks(Person p, const Hat& hat) {
    if (hat.empty())
        return certainly_value(MaybePick{});
    return dist_bind(uniform(hat), [p, hat](const Eff<Person>& drawn) {
        return certainly(lift1([p, hat](Person q) { return MaybePick{Pick{{p, q}, remove_one(hat, q)}}; }, drawn));
    });
}

inline Dist<Game> failed_game() { return certainly_value(Game{true, {}}); }

inline Dist<Game> succeed(std::vector<Assignment> as) { return certainly_value(Game{false, std::move(as)}); }

inline std::vector<Assignment> with(std::vector<Assignment> as, const Assignment& a) {
    as.insert(as.begin(), a);
    return as;
}

inline Hat put_back(Hat hat, Person p) {
    hat.insert(hat.begin(), p);
    return hat;
}

inline Dist<Game> naive_round(std::vector<Person> ps, std::size_t i, Hat hat, std::vector<Assignment> as) {
    if (i == ps.size())
        return succeed(std::move(as));
    return dist_bind(p_picks(ps[i], hat), [ps, i, as](const Eff<MaybePick>& m) {
        return bind(m, [ps, i, as](const MaybePick& pick) {
            if (!pick)
                return failed_game();
            return naive_round(ps, i + 1, pick->rest, with(as, pick->assignment));
        });
    });
}

inline Dist<Game> no_self_pick_round(std::vector<Person> ps, std::size_t i, Hat hat, std::vector<Assignment> as) {
    if (i == ps.size())
        return succeed(std::move(as));
    Person p = ps[i];
    return dist_bind(p_picks(p, remove_one(hat, p)), [ps, i, hat, as](const Eff<MaybePick>& m) {
        return bind(m, [ps, i, hat, as](const MaybePick& pick) {
            if (!pick)
                return failed_game();
            return no_self_pick_round(ps, i + 1, remove_one(hat, pick->assignment.person), with(as, pick->assignment));
        });
    });
}

// A self-pick is repaired by drawing again, then the first name goes back.
inline Dist<Game> pick_and_check_round(std::vector<Person> ps, std::size_t i, Hat hat, std::vector<Assignment> as) {
    if (i == ps.size())
        return succeed(std::move(as));
    Person p = ps[i];
    return dist_bind(p_picks(p, hat), [ps, i, p, as](const Eff<MaybePick>& m) {
        return bind(m, [ps, i, p, as](const MaybePick& pick) {
            if (!pick)
                return failed_game();
            if (pick->assignment.person != p)
                return pick_and_check_round(ps, i + 1, pick->rest, with(as, pick->assignment));
            return dist_bind(p_picks(p, pick->rest), [ps, i, p, as](const Eff<MaybePick>& m2) {
                return bind(m2, [ps, i, p, as](const MaybePick& pick2) {
                    if (!pick2)
                        return failed_game();
                    return pick_and_check_round(ps, i + 1, put_back(pick2->rest, p), with(as, pick2->assignment));
                });
            });
        });
    });
}

// A self-pick costs one unit of the shared retry budget and redraws from the same hat.
inline Dist<Game> repeat_round(int limit, std::vector<Person> ps, std::size_t i, Hat hat, std::vector<Assignment> as) {
    if (i == ps.size())
        return succeed(std::move(as));
    if (limit == 0)
        return failed_game();
    Person p = ps[i];
    return dist_bind(p_picks(p, hat), [limit, ps, i, p, hat, as](const Eff<MaybePick>& m) {
        return bind(m, [limit, ps, i, p, hat, as](const MaybePick& pick) {
            if (!pick)
                return failed_game();
            if (pick->assignment.person == p)
                return repeat_round(limit - 1, ps, i, hat, as);
            return repeat_round(limit, ps, i + 1, pick->rest, with(as, pick->assignment));
        });
    });
}

inline bool is_failed_game(const Game& g) {
    if (g.failed)
        return true;
    return std::any_of(g.assignments.begin(), g.assignments.end(),
                       [](const Assignment& a) { return a.santa == a.person; });
}

inline std::vector<Person> players(int n) {
    std::vector<Person> ps(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        ps[static_cast<std::size_t>(i)] = i + 1;
    return ps;
}

inline Dist<Game> santa_game(SantaVariant v, int n, int limit = 1) {
    auto ps = players(n);
    switch (v) {
    case SantaVariant::naive: return naive_round(ps, 0, ps, {});
    case SantaVariant::no_self_pick: return no_self_pick_round(ps, 0, ps, {});
    case SantaVariant::pick_and_check: return pick_and_check_round(ps, 0, ps, {});
    case SantaVariant::repeat: return repeat_round(limit, ps, 0, ps, {});
    }
    return failed_game();
}

inline QueryResult santa_failure_prob(SantaVariant v, int n, int limit = 1, const SearchConfig& config = {}) {
    Predicate<Game> failed = [](const Eff<Game>& g) { return lift1(is_failed_game, g); };
    return query_stats(failed, santa_game(v, n, limit), config);
}

} // namespace lazynd::studies
