// pcodes: command-line front end for poset-metric code analysis.
//
// Exit status: 0 success / condition holds, 1 condition fails, 2 input error,
// 3 enumeration budget exceeded, 4 property failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>

#include "posetcodes/codes.hpp"
#include "posetcodes/counting.hpp"
#include "posetcodes/errors.hpp"
#include "posetcodes/io.hpp"
#include "posetcodes/verify.hpp"

namespace pc = posetcodes;
using pc::io::Json;

namespace {

enum Exit : int { Success = 0, ConditionFails = 1, InputError = 2, Budget = 3, PropertyFailure = 4 };

struct JobSpec {
    std::string command;
    std::string poset_file;
    std::string code_file;
    std::string partition_file;
    std::string out_file;
    std::string flatten;  // "", "row" or "col"
    std::uint64_t budget = pc::default_enumeration_budget;
    int threads = 0;
    std::uint64_t seed = 1;
    std::size_t batch = 100;
    std::uint32_t q = 2;
    std::size_t max_n = 8;
    std::optional<std::size_t> max_dim;

    pc::SearchOptions search() const { return {budget, threads}; }
};

bool stderr_is_tty()
{
    return ::isatty(STDERR_FILENO) != 0;
}

void emit(const JobSpec& job, const Json& report)
{
    const std::string text = report.dump(2) + "\n";
    if (job.out_file.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(job.out_file);
    if (!out)
        throw pc::ParseError("cannot write " + job.out_file);
    out << text;
}

std::string join(const std::vector<std::size_t>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + std::to_string(v[i]);
    return s;
}

struct LoadedCode {
    pc::io::PosetDescription poset;
    pc::io::CodeFile file;
    pc::LinearCode code;
};

LoadedCode load_code(const JobSpec& job)
{
    if (job.code_file.empty())
        throw pc::ParseError("--code is required");
    auto file = pc::io::load_code(job.code_file);
    std::filesystem::path poset_path;
    if (!job.poset_file.empty())
        poset_path = job.poset_file;
    else if (file.poset_path)
        poset_path = *file.poset_path;
    else
        throw pc::ParseError("no poset: pass --poset or add a `poset FILE` line to the code file");
    auto poset = pc::io::load_poset(poset_path);
    if (poset.poset.size() != file.n)
        throw pc::ParseError("code length " + std::to_string(file.n) + " does not match poset size " +
                             std::to_string(poset.poset.size()));

    pc::Flattening order = poset.rt_layout ? pc::Flattening::ColumnMajor : pc::Flattening::RowMajor;
    if (job.flatten == "row")
        order = pc::Flattening::RowMajor;
    else if (job.flatten == "col")
        order = pc::Flattening::ColumnMajor;
    const auto rows = pc::io::generator_vectors(file, order, poset.matrix_shape);
    auto subspace = pc::span(pc::Field::get(file.q), file.n, rows);
    pc::LinearCode code(poset.poset, std::move(subspace));
    return {std::move(poset), std::move(file), std::move(code)};
}

Json code_header(const LoadedCode& lc)
{
    Json out;
    out["poset"] = lc.poset.id;
    out["q"] = lc.file.q;
    out["n"] = lc.code.length();
    out["k"] = lc.code.dim();
    return out;
}

int cmd_hierarchy(const JobSpec& job)
{
    const auto lc = load_code(job);
    const auto h = pc::weight_hierarchy(lc.code, job.search());
    const auto support = pc::support_of_code(lc.code);
    Json out = code_header(lc);
    out["hierarchy"] = h.values;
    out["support"] = pc::io::to_json(support.elements());
    out["support_totally_ordered"] = lc.code.poset().is_total_on(support);
    emit(job, out);
    if (stderr_is_tty())
        std::cerr << "[" << lc.code.length() << "; " << lc.code.dim() << "; " << join(h.values) << "]_"
                  << lc.file.q << " under " << lc.poset.id << "\n";
    return Success;
}

int cmd_chain(const JobSpec& job, bool with_uniqueness)
{
    const auto lc = load_code(job);
    const auto h = pc::weight_hierarchy(lc.code, job.search());
    const auto flag = pc::find_maximal_flag(lc.code, job.search());

    Json out = code_header(lc);
    out["hierarchy"] = h.values;
    out["chain_condition"] = flag.has_value();
    out["flag"] = flag ? pc::io::to_json(*flag) : Json(nullptr);
    if (with_uniqueness) {
        if (flag) {
            const auto u = pc::is_flag_unique(lc.code, job.search());
            out["unique"] = u.unique;
            out["flag_count"] = u.flag_count.str();
            if (!u.unique)
                out["second_flag"] = pc::io::to_json(*u.second);
        } else {
            out["unique"] = false;
            out["flag_count"] = "0";
        }
    }
    emit(job, out);
    if (stderr_is_tty()) {
        std::cerr << "hierarchy (" << join(h.values) << "): chain condition "
                  << (flag ? "holds" : "fails");
        if (with_uniqueness && flag)
            std::cerr << ", flag " << (out["unique"].get<bool>() ? "unique" : "not unique");
        std::cerr << "\n";
    }
    return flag ? Success : ConditionFails;
}

pc::ChainPartition choose_partition(const JobSpec& job, const pc::Poset& p, std::size_t& width)
{
    const auto dilworth = pc::width_and_min_chain_partition(p);
    width = dilworth.width;
    if (job.partition_file.empty())
        return dilworth.partition;
    return pc::io::load_partition(job.partition_file, p);
}

Json partition_json(const pc::ChainPartition& partition)
{
    Json arr = Json::array();
    for (const auto& chain : partition.chains)
        arr.push_back(pc::io::to_json(chain));
    return arr;
}

pc::io::PosetDescription require_poset(const JobSpec& job)
{
    if (job.poset_file.empty())
        throw pc::ParseError("--poset is required");
    return pc::io::load_poset(job.poset_file);
}

int cmd_bound(const JobSpec& job)
{
    const auto desc = require_poset(job);
    pc::Field::get(job.q);
    std::size_t width = 0;
    const auto partition = choose_partition(job, desc.poset, width);
    const auto bound = pc::chain_condition_lower_bound(partition, job.q);

    Json out;
    out["poset"] = desc.id;
    out["width"] = width;
    out["partition"] = partition_json(partition);
    const Json bound_json = pc::io::to_json(bound);
    for (const auto& [key, value] : bound_json.items())
        out[key] = value;
    emit(job, out);
    if (stderr_is_tty())
        std::cerr << "lower bound " << bound.bound << " over " << partition.size() << " chains (width " << width
                  << ")\n";
    return Success;
}

int cmd_census(const JobSpec& job)
{
    const auto desc = require_poset(job);
    pc::Field::get(job.q);
    std::size_t width = 0;
    const auto partition = choose_partition(job, desc.poset, width);
    const auto bound = pc::chain_condition_lower_bound(partition, job.q);
    const auto report = pc::census(desc.poset, job.q, job.max_dim.value_or(desc.poset.size()), job.search(), desc.id);

    const pc::BigInt counted = report.chain_condition_total;
    Json out;
    out["poset"] = desc.id;
    out["width"] = width;
    out["partition"] = partition_json(partition);
    out["census"] = pc::io::to_json(report);
    out["bound"] = pc::io::to_json(bound);
    out["bound_holds"] = counted >= bound.bound;
    out["tight"] = counted == bound.bound;
    emit(job, out);
    if (stderr_is_tty())
        std::cerr << "census " << report.chain_condition_total << " chain-condition codes, bound " << bound.bound
                  << "\n";
    // A full census below the bound contradicts the bound.
    const bool full = !job.max_dim || *job.max_dim >= desc.poset.size();
    return full && counted < bound.bound ? PropertyFailure : Success;
}

Json failure_json(const pc::verify::Report& report)
{
    Json arr = Json::array();
    for (const auto& f : report.failures)
        arr.push_back(Json{{"property", f.property}, {"detail", f.detail}});
    return arr;
}

int cmd_verify(const JobSpec& job)
{
    Json out;
    if (!job.code_file.empty()) {
        const auto lc = load_code(job);
        pc::verify::Instance inst{lc.code.poset(), Json(), lc.code.code(), std::nullopt,
                                  lc.file.expected_hierarchy};
        if (lc.poset.rt_layout)
            inst.rt_shape = lc.poset.matrix_shape;
        const auto report = pc::verify::verify_instance(inst, job.search());
        out["mode"] = "instance";
        out["poset"] = lc.poset.id;
        out["checked"] = report.checked;
        out["failures"] = failure_json(report);
        out["ok"] = report.ok();
        emit(job, out);
        if (!report.ok()) {
            std::cerr << "property failure on " << job.code_file << ":\n";
            for (const auto& f : report.failures)
                std::cerr << "  " << f.property << ": " << f.detail << "\n";
            return PropertyFailure;
        }
        return Success;
    }

    pc::Field::get(job.q);
    if (job.max_n < 1)
        throw pc::ParseError("--max-n must be positive");
    pc::verify::Rng rng(job.seed);
    std::size_t instances = 0;
    std::map<std::string, std::size_t> checked;
    for (std::size_t i = 0; i < job.batch; ++i) {
        auto inst = (i % 2 == 0) ? pc::verify::random_instance(rng, job.q, job.max_n)
                                 : pc::verify::random_total_support_instance(rng, job.q, job.max_n);
        const auto report = pc::verify::verify_instance(inst, job.search());
        ++instances;
        for (const auto& name : report.checked)
            ++checked[name];
        if (!report.ok()) {
            out["mode"] = "batch";
            out["seed"] = job.seed;
            out["instance_index"] = i;
            out["counterexample"] = Json{{"poset", inst.poset_json}, {"code", pc::io::write_code_text(inst.code)}};
            out["failures"] = failure_json(report);
            out["ok"] = false;
            emit(job, out);
            std::cerr << "property failure (seed " << job.seed << ", instance " << i << ")\n"
                      << "poset: " << inst.poset_json.dump() << "\n"
                      << pc::io::write_code_text(inst.code);
            return PropertyFailure;
        }
    }
    out["mode"] = "batch";
    out["seed"] = job.seed;
    out["q"] = job.q;
    out["max_n"] = job.max_n;
    out["instances"] = instances;
    Json counts;
    for (const auto& [name, count] : checked)
        counts[name] = count;
    out["checked"] = counts;
    out["failures"] = Json::array();
    out["ok"] = true;
    emit(job, out);
    if (stderr_is_tty())
        std::cerr << instances << " random instances passed\n";
    return Success;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Generalized poset-weight hierarchies and the chain condition for linear codes"};
    app.require_subcommand(1);
    JobSpec job;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--poset", job.poset_file, "Poset description (JSON)");
        sub->add_option("--budget", job.budget, "Enumeration budget (subspaces or codewords)");
        sub->add_option("--threads", job.threads, "Worker threads (0 = OpenMP default)");
        sub->add_option("--out", job.out_file, "Write the JSON report here instead of stdout");
    };
    auto add_code = [&](CLI::App* sub) {
        sub->add_option("--code", job.code_file, "Generator matrix file");
        sub->add_option("--flatten", job.flatten, "Matrix reading for code rows")->check(CLI::IsMember({"row", "col"}));
    };

    auto* hierarchy = app.add_subcommand("hierarchy", "Weight hierarchy d_1..d_k of a code");
    auto* chain = app.add_subcommand("chain", "Chain condition and flag uniqueness");
    auto* flag = app.add_subcommand("flag", "A maximal flag attaining the hierarchy");
    auto* bound = app.add_subcommand("bound", "Lower bound on chain-condition codes from a chain partition");
    auto* census = app.add_subcommand("census", "Count chain-condition codes exhaustively");
    auto* verify = app.add_subcommand("verify", "Run the property suite on a code or a random batch");

    for (auto* sub : {hierarchy, chain, flag, bound, census, verify})
        add_common(sub);
    for (auto* sub : {hierarchy, chain, flag, verify})
        add_code(sub);
    for (auto* sub : {bound, census}) {
        sub->add_option("--partition", job.partition_file, "Chain partition (JSON); default is Dilworth-minimal");
        sub->add_option("--q", job.q, "Field order");
    }
    census->add_option("--max-dim", job.max_dim, "Largest code dimension to enumerate");
    verify->add_option("--seed", job.seed, "Seed for the random batch");
    verify->add_option("--batch", job.batch, "Number of random instances");
    verify->add_option("--q", job.q, "Field order for the random batch");
    verify->add_option("--max-n", job.max_n, "Largest code length for the random batch");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return InputError;
    }

    try {
        if (*hierarchy)
            return cmd_hierarchy(job);
        if (*chain)
            return cmd_chain(job, true);
        if (*flag)
            return cmd_chain(job, false);
        if (*bound)
            return cmd_bound(job);
        if (*census)
            return cmd_census(job);
        return cmd_verify(job);
    } catch (const pc::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Budget;
    } catch (const pc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return InputError;
    }
}
