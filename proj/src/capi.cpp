#include "hamrank/hamrank.h"

#include "hamrank/bounds.hpp"
#include "hamrank/commands.hpp"
#include "hamrank/protocol.hpp"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

struct hr_instance {
    hamrank::HammingInstance inst;
};

struct hr_matrix {
    hamrank::BitMatrix mat;
};

namespace {

thread_local std::string g_error;

hr_status fail(hr_status s, const char* what) {
    g_error = what;
    return s;
}

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

std::string str(const char* s) { return s ? s : ""; }

// Order matters: LimitError derives from invalid_argument.
template <class Fn>
hr_status guarded(Fn&& fn) {
    try {
        g_error.clear();
        return fn();
    } catch (const hamrank::LimitError& e) {
        return fail(HR_LIMIT_EXCEEDED, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(HR_INVALID_ARGUMENT, e.what());
    } catch (const std::out_of_range& e) {
        return fail(HR_INVALID_ARGUMENT, e.what());
    } catch (const std::overflow_error& e) {
        return fail(HR_LIMIT_EXCEEDED, e.what());
    } catch (const std::runtime_error& e) {
        return fail(HR_IO_ERROR, e.what());
    } catch (const std::exception& e) {
        return fail(HR_INTERNAL_ERROR, e.what());
    } catch (...) {
        return fail(HR_INTERNAL_ERROR, "unknown error");
    }
}

hamrank::Mode to_mode(hr_mode m) {
    switch (m) {
        case HR_MODE_THRESHOLD: return hamrank::Mode::threshold;
        case HR_MODE_EXACT: return hamrank::Mode::exact;
    }
    throw std::invalid_argument("bad mode");
}

const char* command_name(hr_command c) {
    switch (c) {
        case HR_CMD_SPECTRUM: return "spectrum";
        case HR_CMD_BOUNDS: return "bounds";
        case HR_CMD_RANK: return "rank";
        case HR_CMD_VERIFY: return "verify";
        case HR_CMD_EXPORT: return "export";
        case HR_CMD_DCC: return "dcc";
        case HR_CMD_SWEEP: return "sweep";
    }
    throw std::invalid_argument("bad command");
}

#define HR_REQUIRE(p) \
    if (!(p)) return fail(HR_INVALID_ARGUMENT, "null argument: " #p)

}  // namespace

extern "C" {

const char* hr_version(void) { return "1.0.0"; }

const char* hr_last_error(void) { return g_error.c_str(); }

void hr_free(void* p) { std::free(p); }

void hr_run_config_init(hr_run_config* cfg) {
    if (!cfg) return;
    *cfg = hr_run_config{};
    cfg->command = HR_CMD_SPECTRUM;
    cfg->n = 1;
    cfg->seed = 1;
}

hr_status hr_run(const hr_run_config* cfg, char** out) {
    HR_REQUIRE(cfg);
    HR_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        hamrank::RunConfig rc;
        rc.command = command_name(cfg->command);
        rc.target = str(cfg->target);
        rc.n = cfg->n;
        rc.a = cfg->a;
        rc.mode = to_mode(cfg->mode);
        rc.max_n = cfg->max_n;
        rc.seed = cfg->seed;
        switch (cfg->oracle) {
            case HR_ORACLE_MODP: rc.oracle = hamrank::RankOracle::modp; break;
            case HR_ORACLE_EXACT: rc.oracle = hamrank::RankOracle::exact; break;
            case HR_ORACLE_BOTH: rc.oracle = hamrank::RankOracle::both; break;
            default: throw std::invalid_argument("bad oracle");
        }
        switch (cfg->format) {
            case HR_FORMAT_JSON: rc.format = hamrank::Format::json; break;
            case HR_FORMAT_CSV: rc.format = hamrank::Format::csv; break;
            case HR_FORMAT_TEXT: rc.format = hamrank::Format::text; break;
            default: throw std::invalid_argument("bad format");
        }
        rc.in_path = str(cfg->in_path);
        rc.out_path = str(cfg->out_path);
        const auto res = hamrank::run_command(rc);
        *out = dup(res.output);
        if (res.outcome == hamrank::Outcome::property_failed) {
            g_error = "property check failed";
            return HR_PROPERTY_FAILED;
        }
        return HR_OK;
    });
}

hr_status hr_instance_create(int n, int a, hr_mode mode, hr_instance** out) {
    HR_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        *out = new hr_instance{hamrank::HammingInstance::make(n, a, to_mode(mode))};
        return HR_OK;
    });
}

void hr_instance_destroy(hr_instance* inst) { delete inst; }

hr_status hr_instance_eigenvalue(const hr_instance* inst, int m, char** out) {
    HR_REQUIRE(inst);
    HR_REQUIRE(out);
    return guarded([&] {
        if (m < 0 || m > inst->inst.n) throw std::invalid_argument("m out of range");
        *out = dup(hamrank::to_decimal(hamrank::eigenvalue(inst->inst, m)));
        return HR_OK;
    });
}

hr_status hr_instance_rank(const hr_instance* inst, char** out) {
    HR_REQUIRE(inst);
    HR_REQUIRE(out);
    return guarded([&] {
        *out = dup(hamrank::to_decimal(hamrank::SpectrumTable(inst->inst).rank()));
        return HR_OK;
    });
}

hr_status hr_instance_bounds(const hr_instance* inst, hr_bounds* out) {
    HR_REQUIRE(inst);
    HR_REQUIRE(out);
    return guarded([&] {
        const auto b = hamrank::log_rank_bounds(inst->inst);
        *out = hr_bounds{};
        out->d_lower = b.d_lower;
        out->cstar_lower = b.cstar_lower;
        out->qstar_lower = b.qstar_lower;
        out->general_n_minus_2 = b.theorem_flags.general_n_minus_2;
        out->small_a_applies = b.theorem_flags.small_a_applies;
        out->small_a_full_n = b.theorem_flags.small_a_full_n;
        out->has_complement = b.complement.has_value();
        out->complement_a = b.complement ? b.complement->reduced.a : -1;
        return HR_OK;
    });
}

hr_status hr_matrix_build(const hr_instance* inst, hr_matrix** out) {
    HR_REQUIRE(inst);
    HR_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        *out = new hr_matrix{hamrank::BitMatrix::build(inst->inst)};
        return HR_OK;
    });
}

hr_status hr_matrix_parse(const char* text, hr_matrix** out) {
    HR_REQUIRE(text);
    HR_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        *out = new hr_matrix{hamrank::BitMatrix::parse(text)};
        return HR_OK;
    });
}

hr_status hr_matrix_load(const char* path, hr_matrix** out) {
    HR_REQUIRE(path);
    HR_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::runtime_error(std::string("cannot open '") + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        *out = new hr_matrix{hamrank::BitMatrix::parse(ss.str())};
        return HR_OK;
    });
}

void hr_matrix_destroy(hr_matrix* mat) { delete mat; }

hr_status hr_matrix_to_text(const hr_matrix* mat, char** out) {
    HR_REQUIRE(mat);
    HR_REQUIRE(out);
    return guarded([&] {
        *out = dup(mat->mat.to_text());
        return HR_OK;
    });
}

hr_status hr_matrix_rank_mod_p(const hr_matrix* mat, uint64_t prime, int64_t* out) {
    HR_REQUIRE(mat);
    HR_REQUIRE(out);
    return guarded([&] {
        *out = hamrank::rank_mod_p(mat->mat, prime);
        return HR_OK;
    });
}

hr_status hr_matrix_exact_dcc(const hr_matrix* mat, int* out) {
    HR_REQUIRE(mat);
    HR_REQUIRE(out);
    return guarded([&] {
        *out = hamrank::exact_dcc(mat->mat);
        return HR_OK;
    });
}

}  // extern "C"
