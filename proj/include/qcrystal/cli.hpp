#pragma once

// Command-line front end. `run` is the whole program; tools/qcrystal.cpp only
// forwards argv to it.
//
// Exit codes: 0 success, 1 usage error, 2 validation failure,
// 3 cross-method disagreement.

#include <CLI11.hpp>
#include <ostream>

#include "format.hpp"

namespace qcrystal::cli {

enum ExitCode : int { ok = 0, usage_error = 1, validation_failure = 2, disagreement = 3 };

struct CommonOptions {
    int rank = 0;
    std::string format = "text";
    unsigned threads = 0;
    std::size_t max_size = 2'000'000;

    unsigned thread_count() const { return threads == 0 ? default_threads() : threads; }
};

// First shape on which the given results differ.
struct LRDisagreement {
    StrictPartition shape;
    std::vector<std::pair<std::string, std::size_t>> counts;  // method -> coefficient
    std::optional<Word> witness;
};

inline std::optional<LRDisagreement> compare_lr(const std::vector<std::pair<std::string, LRResult>>& results) {
    std::set<StrictPartition> shapes;
    for (const auto& [name, r] : results)
        for (const auto& [nu, c] : r.coefficients) shapes.insert(nu);
    for (const StrictPartition& nu : shapes) {
        LRDisagreement d{nu, {}, std::nullopt};
        bool differ = false;
        for (const auto& [name, r] : results) {
            auto it = r.coefficients.find(nu);
            std::size_t c = it == r.coefficients.end() ? 0 : it->second;
            if (!d.counts.empty() && c != d.counts.front().second) differ = true;
            d.counts.emplace_back(name, c);
            if (!d.witness) {
                for (const LRWitness& w : r.witnesses) {
                    if (w.shape == nu) {
                        d.witness = w.word;
                        break;
                    }
                }
            }
        }
        if (differ) return d;
    }
    return std::nullopt;
}

namespace detail {

inline int cmd_crystal(const CommonOptions& opt, const std::string& shape_text, bool ascii, bool all_odd,
                       std::ostream& out) {
    StrictPartition shape = parse_partition(shape_text);
    auto labels = all_odd ? all_labels(opt.rank) : structure_labels(opt.rank);
    auto graph = build_crystal(shape, opt.rank, labels, opt.max_size);
    if (opt.format == "dot") {
        out << to_dot(graph, {ascii, "B(" + format_partition(shape) + ")"});
    } else if (opt.format == "json") {
        out << to_json(graph).dump(2) << "\n";
    } else {
        out << "rank " << opt.rank << " shape " << format_partition(shape) << "\n" << to_text(graph, ascii);
    }
    return ok;
}

inline nlohmann::json lr_json(const LRResult& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [nu, c] : r.coefficients) rows.push_back({{"nu", partition_json(nu)}, {"multiplicity", c}});
    nlohmann::json witnesses = nlohmann::json::array();
    for (const LRWitness& w : r.witnesses) {
        nlohmann::json item = {{"nu", partition_json(w.shape)}, {"word", format_word(w.word)}};
        if (w.tableau) item["tableau"] = format_tableau(*w.tableau);
        witnesses.push_back(std::move(item));
    }
    return {{"rows", rows}, {"witnesses", witnesses}};
}

inline int cmd_lr(const CommonOptions& opt, const std::string& lambda_text, const std::string& mu_text,
                  const std::string& method, bool show_witnesses, std::ostream& out, std::ostream& err) {
    StrictPartition lambda = parse_partition(lambda_text);
    StrictPartition mu = parse_partition(mu_text);
    if (lambda.length() > opt.rank || mu.length() > opt.rank) {
        throw std::invalid_argument("partition has more parts than the rank");
    }
    unsigned threads = opt.thread_count();

    std::vector<std::pair<std::string, LRResult>> results;
    if (method == "words" || method == "all") results.emplace_back("words", lr_words(lambda, mu, opt.rank, threads));
    if (method == "insertion" || method == "all") {
        results.emplace_back("insertion", lr_insertion(lambda, mu, opt.rank, threads));
    }
    if (method == "graph" || method == "all") {
        results.emplace_back("graph", lr_graph(lambda, mu, opt.rank, threads, opt.max_size));
    }
    auto mismatch = compare_lr(results);
    const LRResult& shown = results.front().second;

    if (opt.format == "json") {
        nlohmann::json doc = {{"format", lr_format_tag},
                              {"rank", opt.rank},
                              {"lambda", partition_json(lambda)},
                              {"mu", partition_json(mu)},
                              {"method", method},
                              {"agree", !mismatch}};
        for (const auto& [name, r] : results) doc["methods"][name] = lr_json(r);
        doc["rows"] = lr_json(shown)["rows"];
        out << doc.dump(2) << "\n";
    } else {
        out << "rank " << opt.rank << " lambda " << format_partition(lambda) << " mu " << format_partition(mu)
            << " method " << method << "\n";
        for (const auto& [nu, c] : shown.coefficients) {
            out << format_partition(nu) << " " << c;
            if (show_witnesses) {
                for (const LRWitness& w : shown.witnesses) {
                    if (w.shape != nu) continue;
                    out << " " << (w.tableau ? format_tableau(*w.tableau) : format_word(w.word));
                }
            }
            out << "\n";
        }
        if (results.size() > 1) out << (mismatch ? "methods disagree" : "methods agree") << "\n";
    }
    if (mismatch) {
        err << "disagreement at nu=" << format_partition(mismatch->shape) << ":";
        for (const auto& [name, c] : mismatch->counts) err << " " << name << "=" << c;
        if (mismatch->witness) err << " witness " << format_word(*mismatch->witness);
        err << "\n";
        return disagreement;
    }
    return ok;
}

inline int cmd_insert(const CommonOptions& opt, const std::string& tableau_text, const std::string& input_text,
                      std::ostream& out, std::ostream& err) {
    ShiftedTableau start = parse_tableau(opt.rank, tableau_text);
    if (auto bad = check_ssdt(start)) {
        err << "invalid tableau " << tableau_text << ": " << describe(*bad) << "\n";
        return validation_failure;
    }
    Word letters(opt.rank);
    bool is_tableau = input_text.find('/') != std::string::npos ||
                      (opt.rank <= 9 && input_text.find(',') != std::string::npos);
    if (is_tableau) {
        ShiftedTableau other = parse_tableau(opt.rank, input_text);
        if (auto bad = check_ssdt(other)) {
            err << "invalid tableau " << input_text << ": " << describe(*bad) << "\n";
            return validation_failure;
        }
        letters = other.reading_word();
    } else {
        letters = parse_word(opt.rank, input_text);
    }
    auto steps = insertion_trace(start, letters);
    if (opt.format == "json") {
        nlohmann::json doc = {{"format", insert_format_tag},
                              {"rank", opt.rank},
                              {"tableau", format_tableau(start)},
                              {"letters", format_word(letters)}};
        doc["steps"] = nlohmann::json::array();
        for (const auto& s : steps) doc["steps"].push_back(format_tableau(s));
        doc["result"] = format_tableau(steps.empty() ? start : steps.back());
        out << doc.dump(2) << "\n";
    } else {
        for (const auto& s : steps) out << format_tableau(s) << "\n";
        if (steps.empty()) out << format_tableau(start) << "\n";
    }
    return ok;
}

inline int cmd_hwv(const CommonOptions& opt, std::size_t length, std::ostream& out) {
    auto labels = structure_labels(opt.rank);
    std::vector<std::tuple<Word, WeightVec, std::size_t>> rows;
    for (const Word& w : enumerate_highest(length, opt.rank)) {
        std::size_t size = closure(std::span<const Word>(&w, 1), labels, opt.max_size).size();
        rows.emplace_back(w, weight(w), size);
    }
    if (opt.format == "json") {
        nlohmann::json doc = {{"format", hwv_format_tag}, {"rank", opt.rank}, {"length", length}};
        doc["vectors"] = nlohmann::json::array();
        for (const auto& [w, wt, size] : rows) {
            doc["vectors"].push_back({{"word", format_word(w)},
                                      {"weight", std::vector<int>(wt.counts().begin(), wt.counts().end())},
                                      {"component_size", size}});
        }
        out << doc.dump(2) << "\n";
    } else {
        for (const auto& [w, wt, size] : rows) out << format_word(w) << " " << format_weight(wt) << " " << size << "\n";
    }
    return ok;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Crystals of the queer Lie superalgebra q(n)", "qcrystal"};
    app.require_subcommand(1);
    app.fallthrough();

    CommonOptions opt;
    app.add_option("-n,--rank", opt.rank, "rank n (letters 1..n)")->required()->check(CLI::Range(1, max_rank));
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "dot", "json"}))
        ->capture_default_str();
    app.add_option("--threads", opt.threads, "worker threads, 0 = all cores")->capture_default_str();
    app.add_option("--max-size", opt.max_size, "refuse crystals with more vertices than this")
        ->capture_default_str();

    std::string shape_text, lambda_text, mu_text, method = "all", tableau_text, input_text;
    bool ascii = false, all_odd = false, show_witnesses = false;
    std::size_t length = 0;

    auto* crystal = app.add_subcommand("crystal", "crystal graph B(lambda) of decomposition tableaux");
    crystal->add_option("lambda", shape_text, "strict partition, e.g. 3,1")->required();
    crystal->add_flag("--ascii", ascii, "write odd labels as i~");
    crystal->add_flag("--all-odd", all_odd, "include the conjugated odd operators i~ for i >= 2");

    auto* lr = app.add_subcommand("lr", "decompose B(lambda) (x) B(mu)");
    lr->add_option("lambda", lambda_text)->required();
    lr->add_option("mu", mu_text)->required();
    lr->add_option("--method", method)
        ->check(CLI::IsMember({"words", "insertion", "graph", "all"}))
        ->capture_default_str();
    lr->add_flag("--witnesses", show_witnesses, "list the witnesses of each coefficient");

    auto* insert = app.add_subcommand("insert", "insert letters or a tableau into a tableau");
    insert->add_option("tableau", tableau_text, "tableau literal, e.g. 66135/324")->required();
    insert->add_option("input", input_text, "word (e.g. 333) or tableau literal (e.g. 22/1)")->required();

    auto* hwv = app.add_subcommand("hwv", "highest weight words of length N");
    hwv->add_option("N", length)->required();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (opt.format == "dot" && !crystal->parsed()) throw std::invalid_argument("dot output is only for crystal");
        if (crystal->parsed()) return detail::cmd_crystal(opt, shape_text, ascii, all_odd, out);
        if (lr->parsed()) return detail::cmd_lr(opt, lambda_text, mu_text, method, show_witnesses, out, err);
        if (insert->parsed()) return detail::cmd_insert(opt, tableau_text, input_text, out, err);
        return detail::cmd_hwv(opt, length, out);
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << " (raise --max-size)\n";
        return usage_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(std::move(args), out, err);
}

}  // namespace qcrystal::cli
