#include "weblog/porter.hpp"

#include <array>
#include <cctype>

namespace weblog {

namespace {

// Works on a private copy of the token; `end` tracks the current logical
// length while suffix rules shrink or rewrite the tail.
class PorterState {
public:
    explicit PorterState(std::string_view token) : w_(token), end_(token.size()) {}

    std::string result() const { return w_.substr(0, end_); }

    void run() {
        step1ab();
        step1c();
        step2();
        step3();
        step4();
        step5();
    }

private:
    std::string w_;
    std::size_t end_;   // one past the last live character
    std::size_t stem_ = 0;  // one past the stem when a suffix has matched

    bool is_consonant(std::size_t i) const {
        switch (w_[i]) {
            case 'a': case 'e': case 'i': case 'o': case 'u':
                return false;
            case 'y':
                return i == 0 ? true : !is_consonant(i - 1);
            default:
                return true;
        }
    }

    // Number of vowel->consonant transitions in w[0, limit).
    std::size_t measure(std::size_t limit) const {
        std::size_t n = 0, i = 0;
        while (i < limit && is_consonant(i)) ++i;
        while (i < limit) {
            while (i < limit && !is_consonant(i)) ++i;
            if (i >= limit) break;
            ++n;
            while (i < limit && is_consonant(i)) ++i;
        }
        return n;
    }

    bool vowel_in(std::size_t limit) const {
        for (std::size_t i = 0; i < limit; ++i)
            if (!is_consonant(i)) return true;
        return false;
    }

    bool double_consonant(std::size_t limit) const {
        return limit >= 2 && w_[limit - 1] == w_[limit - 2] && is_consonant(limit - 1);
    }

    // consonant-vowel-consonant tail where the final consonant is not w, x
    // or y; used to decide whether a trailing e still belongs to the word.
    bool cvc(std::size_t limit) const {
        if (limit < 3) return false;
        if (!is_consonant(limit - 1) || is_consonant(limit - 2) || !is_consonant(limit - 3))
            return false;
        char c = w_[limit - 1];
        return c != 'w' && c != 'x' && c != 'y';
    }

    bool ends(std::string_view s) {
        if (s.size() > end_) return false;
        if (w_.compare(end_ - s.size(), s.size(), s) != 0) return false;
        stem_ = end_ - s.size();
        return true;
    }

    void set_tail(std::string_view s) {
        w_.replace(stem_, w_.size() - stem_, s);
        end_ = stem_ + s.size();
    }

    void replace_if_measure(std::string_view s) {
        if (measure(stem_) > 0) set_tail(s);
    }

    void step1ab() {
        if (w_[end_ - 1] == 's') {
            if (ends("sses"))
                end_ -= 2;
            else if (ends("ies"))
                set_tail("i");
            else if (end_ >= 2 && w_[end_ - 2] != 's')
                --end_;
        }
        if (ends("eed")) {
            if (measure(stem_) > 0) --end_;
        } else if ((ends("ed") || ends("ing")) && vowel_in(stem_)) {
            end_ = stem_;
            if (ends("at"))
                set_tail("ate");
            else if (ends("bl"))
                set_tail("ble");
            else if (ends("iz"))
                set_tail("ize");
            else if (double_consonant(end_)) {
                char c = w_[end_ - 1];
                if (c != 'l' && c != 's' && c != 'z') --end_;
            } else if (measure(end_) == 1 && cvc(end_)) {
                stem_ = end_;
                set_tail("e");
            }
        }
    }

    void step1c() {
        if (ends("y") && vowel_in(stem_)) w_[end_ - 1] = 'i';
    }

    struct Rule {
        std::string_view suffix, replacement;
    };

    // Longest suffix first; once a suffix matches no later rule is tried.
    void apply_rules(std::initializer_list<Rule> rules) {
        for (const Rule& r : rules) {
            if (ends(r.suffix)) {
                replace_if_measure(r.replacement);
                return;
            }
        }
    }

    void step2() {
        apply_rules({{"ational", "ate"},
                     {"ization", "ize"},
                     {"iveness", "ive"},
                     {"fulness", "ful"},
                     {"ousness", "ous"},
                     {"tional", "tion"},
                     {"biliti", "ble"},
                     {"entli", "ent"},
                     {"ousli", "ous"},
                     {"ation", "ate"},
                     {"alism", "al"},
                     {"aliti", "al"},
                     {"iviti", "ive"},
                     {"enci", "ence"},
                     {"anci", "ance"},
                     {"izer", "ize"},
                     {"alli", "al"},
                     {"ator", "ate"},
                     {"logi", "log"},
                     {"bli", "ble"},
                     {"eli", "e"}});
    }

    void step3() {
        apply_rules({{"icate", "ic"},
                     {"ative", ""},
                     {"alize", "al"},
                     {"iciti", "ic"},
                     {"ical", "ic"},
                     {"ful", ""},
                     {"ness", ""}});
    }

    void step4() {
        static constexpr std::array<std::string_view, 19> suffixes = {
            "ement", "ance", "ence", "able", "ible", "ment", "ant", "ent", "ion", "ism",
            "ate",   "iti",  "ous",  "ive",  "ize",  "al",   "er",  "ic",  "ou"};
        for (std::string_view s : suffixes) {
            if (!ends(s)) continue;
            // "ion" drops only after s or t; a matched suffix whose
            // condition fails still ends the step.
            if (s == "ion" && !(stem_ >= 1 && (w_[stem_ - 1] == 's' || w_[stem_ - 1] == 't')))
                return;
            if (measure(stem_) > 1) end_ = stem_;
            return;
        }
    }

    void step5() {
        if (w_[end_ - 1] == 'e') {
            std::size_t a = measure(end_);
            if (a > 1 || (a == 1 && !cvc(end_ - 1))) --end_;
        }
        if (w_[end_ - 1] == 'l' && double_consonant(end_) && measure(end_) > 1) --end_;
    }
};

}  // namespace

std::string porter_stem(std::string_view token) {
    if (token.size() <= 2) return std::string(token);
    for (char c : token)
        if (std::isdigit(static_cast<unsigned char>(c))) return std::string(token);
    PorterState state(token);
    state.run();
    return state.result();
}

}  // namespace weblog
