// Command-line surface for the epichristoffel word library. Exit codes:
//   0  success
//   1  domain rejection (reason printed on stdout)
//   2  usage or parse error (message printed on stderr)

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "epi/epichristoffel.hpp"
#include "epi/json.hpp"
#include "epi/morphisms.hpp"
#include "epi/oracles.hpp"
#include "epi/words.hpp"

namespace {

using nlohmann::json;

constexpr std::string_view kLowercase = "abcdefghijklmnopqrstuvwxyz";

epi::Alphabet vector_alphabet(const std::string& flag, std::size_t arity) {
    if (!flag.empty()) {
        epi::Alphabet alphabet{flag};
        if (alphabet.size() != arity)
            epi::raise(epi::Errc::SizeMismatch, "--alphabet size must match the vector arity");
        return alphabet;
    }
    if (arity == 0 || arity > kLowercase.size())
        epi::raise(epi::Errc::InvalidAlphabet, "provide --alphabet for this vector arity");
    return epi::Alphabet{kLowercase.substr(0, arity)};
}

// Default alphabet for word commands: the distinct characters of the inputs
// in ASCII order.
epi::Alphabet word_alphabet(const std::string& flag, const std::string& letters) {
    if (!flag.empty()) return epi::Alphabet{flag};
    std::string distinct;
    for (char c : letters)
        if (distinct.find(c) == std::string::npos) distinct.push_back(c);
    std::sort(distinct.begin(), distinct.end());
    return epi::Alphabet{distinct};
}

void require_word_argument(const std::string& w) {
    if (w.empty()) epi::raise(epi::Errc::ParseError, "word argument must be non-empty");
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) {
            out.push_back(text.substr(pos));
            break;
        }
        out.push_back(text.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return out;
}

struct PropOutcome {
    bool pass = false;
    json detail;
};

const std::vector<std::string> kKnownProps = {
    "primitive",      "palindrome",      "balanced",        "lyndon",
    "c-epichristoffel", "epichristoffel", "palindromic-split", "reversal-closed",
    "common-sequence", "factor-witness", "two-c-split",     "lyndon-split-free",
};

PropOutcome run_prop(const std::string& prop, const epi::Word& w, const epi::Alphabet& alphabet) {
    using namespace epi;
    if (prop == "primitive") return {is_primitive(w), {}};
    if (prop == "palindrome") return {is_palindrome(w), {}};
    if (prop == "balanced") return {is_balanced(w), {}};
    if (prop == "lyndon") return {is_lyndon(w, alphabet), {}};
    if (prop == "c-epichristoffel") return {is_c_epichristoffel(w, alphabet), {}};
    if (prop == "epichristoffel") return {is_epichristoffel(w, alphabet), {}};
    if (prop == "palindromic-split") {
        auto splits = two_palindrome_decompositions(w);
        json detail = json::array();
        for (const auto& [u, v] : splits) detail.push_back({u.str(), v.str()});
        return {!splits.empty(), std::move(detail)};
    }
    if (prop == "reversal-closed") return {check_reversal_closure(w), {}};
    if (prop == "common-sequence") {
        try {
            return {true, to_json(conjugates_in_common_sequence(w, alphabet))};
        } catch (const Error&) {
            return {false, {}};
        }
    }
    if (prop == "factor-witness") {
        try {
            auto [morphism, prefix] = factor_witness(w, alphabet);
            return {true, json{{"morphism", morphism.to_text()}, {"prefix", prefix.str()}}};
        } catch (const Error&) {
            return {false, {}};
        }
    }
    if (prop == "two-c-split") {
        try {
            auto splits = decompose_two_c_epichristoffel(w, alphabet);
            json detail = json::array();
            for (const auto& [u, v] : splits) detail.push_back({u.str(), v.str()});
            return {!splits.empty(), std::move(detail)};
        } catch (const Error&) {
            return {false, {}};
        }
    }
    if (prop == "lyndon-split-free") {
        try {
            return {epichristoffel_never_two_epichristoffel(w, alphabet), {}};
        } catch (const Error&) {
            return {false, {}};
        }
    }
    epi::raise(epi::Errc::ParseError, "unknown property '" + prop + "'");
}

struct CommonFlags {
    std::string alphabet;
    bool json_out = false;
};

int cmd_christoffel(std::uint64_t p, std::uint64_t q, const CommonFlags& flags) {
    std::optional<epi::Alphabet> alphabet;
    try {
        alphabet = flags.alphabet.empty() ? epi::Alphabet{"ab"} : epi::Alphabet{flags.alphabet};
    } catch (const epi::Error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
    try {
        std::cout << epi::christoffel(p, q, *alphabet).str() << '\n';
        return 0;
    } catch (const epi::Error& e) {
        std::cout << e.what() << '\n';
        return 1;
    }
}

int cmd_epic_check(const std::string& vector_text, const CommonFlags& flags, bool with_trace) {
    std::optional<epi::ParikhVector> vec;
    std::optional<epi::Alphabet> alphabet;
    try {
        vec = epi::parse_parikh(vector_text);
        alphabet = vector_alphabet(flags.alphabet, vec->size());
    } catch (const epi::Error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
    try {
        const epi::TTrace trace = epi::t_test(*vec);
        if (flags.json_out) {
            std::cout << epi::to_json(trace, *alphabet).dump() << '\n';
        } else {
            std::cout << (trace.accepted ? "yes" : "no") << '\n';
            if (with_trace) std::cout << epi::to_json(trace, *alphabet).dump() << '\n';
        }
        return trace.accepted ? 0 : 1;
    } catch (const epi::Error& e) {
        std::cout << e.what() << '\n';
        return 1;
    }
}

int cmd_epic_build(const std::string& vector_text, const CommonFlags& flags) {
    std::optional<epi::ParikhVector> vec;
    std::optional<epi::Alphabet> alphabet;
    try {
        vec = epi::parse_parikh(vector_text);
        alphabet = vector_alphabet(flags.alphabet, vec->size());
    } catch (const epi::Error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
    try {
        const epi::EpichristoffelClass cls = epi::build_class(*vec, *alphabet);
        if (flags.json_out) {
            std::cout << epi::to_json(cls, *alphabet).dump() << '\n';
        } else {
            std::cout << "standard " << cls.standard_word.str() << '\n';
            std::cout << "lyndon " << cls.epichristoffel_word.str() << '\n';
        }
        return 0;
    } catch (const epi::Error& e) {
        std::cout << e.what() << '\n';
        return 1;
    }
}

int cmd_epic_test(const std::string& word_text, const CommonFlags& flags) {
    std::optional<epi::Alphabet> alphabet;
    try {
        require_word_argument(word_text);
        alphabet = word_alphabet(flags.alphabet, word_text);
    } catch (const epi::Error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
    try {
        const epi::Word w{word_text};
        std::string verdict = "neither";
        if (epi::is_epichristoffel(w, *alphabet))
            verdict = "epichristoffel";
        else if (epi::is_c_epichristoffel(w, *alphabet))
            verdict = "c-epichristoffel";
        if (flags.json_out)
            std::cout << json{{"word", word_text}, {"classification", verdict}}.dump() << '\n';
        else
            std::cout << verdict << '\n';
        return verdict == "neither" ? 1 : 0;
    } catch (const epi::Error& e) {
        std::cout << e.what() << '\n';
        return 1;
    }
}

int cmd_pal(const std::string& word_text, const CommonFlags& flags) {
    std::optional<epi::Alphabet> alphabet;
    try {
        require_word_argument(word_text);
        alphabet = word_alphabet(flags.alphabet, word_text);
    } catch (const epi::Error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
    try {
        const epi::Word w{word_text};
        alphabet->require_all(w);
        std::cout << epi::pal(w).str() << '\n';
        return 0;
    } catch (const epi::Error& e) {
        std::cout << e.what() << '\n';
        return 1;
    }
}

int cmd_gen(const std::string& directive_text, std::size_t length, const std::string& spins,
            const CommonFlags& flags) {
    std::optional<epi::DirectiveWord> directive;
    std::optional<epi::Alphabet> alphabet;
    try {
        directive = epi::make_directive(directive_text, spins);
        if (directive->letters.empty())
            epi::raise(epi::Errc::InvalidDirective, "directive must contain at least one letter");
        alphabet = word_alphabet(flags.alphabet, directive->letters.str());
    } catch (const epi::Error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
    try {
        alphabet->require_all(directive->letters);
        std::cout << epi::standard_prefix(*directive, length).str() << '\n';
        return 0;
    } catch (const epi::Error& e) {
        std::cout << e.what() << '\n';
        return 1;
    }
}

int cmd_morph(const std::string& spec_text, const std::string& word_text, const CommonFlags& flags) {
    std::optional<epi::MorphismSpec> spec;
    std::optional<epi::Alphabet> alphabet;
    try {
        require_word_argument(word_text);
        spec = epi::MorphismSpec::parse(spec_text);
        std::string letters = word_text;
        for (const epi::Generator& g : spec->generators()) {
            letters.push_back(g.letter());
            if (g.kind() == epi::GeneratorKind::Exchange) letters.push_back(g.other());
        }
        alphabet = word_alphabet(flags.alphabet, letters);
    } catch (const epi::Error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
    try {
        std::cout << epi::apply_morphism(*spec, epi::Word{word_text}, *alphabet).str() << '\n';
        return 0;
    } catch (const epi::Error& e) {
        std::cout << e.what() << '\n';
        return 1;
    }
}

int cmd_verify(const std::string& word_text, const std::string& props_flag, const CommonFlags& flags) {
    std::optional<epi::Alphabet> alphabet;
    std::vector<std::string> props;
    try {
        require_word_argument(word_text);
        alphabet = word_alphabet(flags.alphabet, word_text);
        if (props_flag.empty()) {
            props = {"primitive", "palindromic-split", "reversal-closed", "common-sequence"};
        } else {
            props = split_list(props_flag);
            for (const std::string& p : props)
                if (std::find(kKnownProps.begin(), kKnownProps.end(), p) == kKnownProps.end())
                    epi::raise(epi::Errc::ParseError, "unknown property '" + p + "'");
        }
    } catch (const epi::Error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
    try {
        const epi::Word w{word_text};
        alphabet->require_all(w);
        bool all_pass = true;
        json report = json::array();
        for (const std::string& prop : props) {
            const PropOutcome outcome = run_prop(prop, w, *alphabet);
            all_pass = all_pass && outcome.pass;
            if (flags.json_out) {
                json entry{{"prop", prop}, {"pass", outcome.pass}};
                if (!outcome.detail.is_null()) entry["detail"] = outcome.detail;
                report.push_back(std::move(entry));
            } else {
                std::cout << prop << ": " << (outcome.pass ? "pass" : "fail") << '\n';
            }
        }
        if (flags.json_out) std::cout << report.dump() << '\n';
        return all_pass ? 0 : 1;
    } catch (const epi::Error& e) {
        std::cout << e.what() << '\n';
        return 1;
    }
}

int cmd_enumerate(const std::string& alphabet_text, std::size_t max_len, const CommonFlags& flags) {
    std::optional<epi::Alphabet> alphabet;
    try {
        alphabet = epi::Alphabet{alphabet_text};
    } catch (const epi::Error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
    try {
        const auto classes = epi::enumerate_classes(*alphabet, max_len);
        if (flags.json_out) {
            json out = json::array();
            for (const auto& cls : classes) out.push_back(epi::to_json(cls, *alphabet));
            std::cout << out.dump() << '\n';
        } else {
            for (const auto& cls : classes) std::cout << cls.epichristoffel_word.str() << '\n';
        }
        return 0;
    } catch (const epi::Error& e) {
        std::cout << e.what() << '\n';
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"epichristoffel words: construction, decision, and verification"};
    app.require_subcommand(1);

    std::string vector_text, word_text, spec_text, directive_text, spins, props, alphabet_flag;
    std::uint64_t p = 0, q = 0;
    std::size_t length = 0, max_len = 0;
    bool json_out = false, with_trace = false;

    auto add_common = [&](CLI::App* sub, bool with_json) {
        sub->add_option("--alphabet", alphabet_flag, "ordered alphabet symbols");
        if (with_json) sub->add_flag("--json", json_out, "machine-readable output");
    };

    CLI::App* christoffel = app.add_subcommand("christoffel", "Christoffel word of slope p/q");
    christoffel->add_option("p", p, "number of b's")->required();
    christoffel->add_option("q", q, "number of a's")->required();
    add_common(christoffel, false);

    CLI::App* check = app.add_subcommand("epic-check", "decide whether counts admit an epichristoffel word");
    check->add_option("vector", vector_text, "comma-separated counts, e.g. 5,10,16")->required();
    check->add_flag("--trace", with_trace, "also print the iteration trace as JSON");
    add_common(check, true);

    CLI::App* build = app.add_subcommand("epic-build", "construct the class for the given counts");
    build->add_option("vector", vector_text, "comma-separated counts")->required();
    add_common(build, true);

    CLI::App* test = app.add_subcommand("epic-test", "classify a word");
    test->add_option("word", word_text, "word to classify")->required();
    add_common(test, true);

    CLI::App* palcmd = app.add_subcommand("pal", "iterated palindromic closure");
    palcmd->add_option("word", word_text, "directive word")->required();
    add_common(palcmd, false);

    CLI::App* gen = app.add_subcommand("gen", "standard episturmian prefix for a directive");
    gen->add_option("directive", directive_text, "letters, trailing * = periodic")->required();
    gen->add_option("--length", length, "prefix length")->required()->check(CLI::PositiveNumber);
    gen->add_option("--spins", spins, "0/1 string, one bit per directive letter");
    add_common(gen, false);

    CLI::App* morph = app.add_subcommand("morph", "apply a composed episturmian morphism");
    morph->add_option("spec", spec_text, "tokens: a, a~, a/b (outermost first)")->required();
    morph->add_option("word", word_text, "argument word")->required();
    add_common(morph, false);

    CLI::App* verify = app.add_subcommand("verify", "run per-word structural checks");
    verify->add_option("word", word_text, "word to check")->required();
    verify->add_option("--props", props, "comma-separated property names");
    add_common(verify, true);

    CLI::App* enumerate = app.add_subcommand("enumerate", "list epichristoffel words up to a length");
    enumerate->add_option("--alphabet", alphabet_flag, "ordered alphabet symbols")->required();
    enumerate->add_option("--max-len", max_len, "maximum word length")->required()->check(CLI::PositiveNumber);
    enumerate->add_flag("--json", json_out, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const CommonFlags flags{alphabet_flag, json_out};
    if (christoffel->parsed()) return cmd_christoffel(p, q, flags);
    if (check->parsed()) return cmd_epic_check(vector_text, flags, with_trace);
    if (build->parsed()) return cmd_epic_build(vector_text, flags);
    if (test->parsed()) return cmd_epic_test(word_text, flags);
    if (palcmd->parsed()) return cmd_pal(word_text, flags);
    if (gen->parsed()) return cmd_gen(directive_text, length, spins, flags);
    if (morph->parsed()) return cmd_morph(spec_text, word_text, flags);
    if (verify->parsed()) return cmd_verify(word_text, props, flags);
    if (enumerate->parsed()) return cmd_enumerate(alphabet_flag, max_len, flags);
    return 2;
}
