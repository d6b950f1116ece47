#include "apxalg/apxalg.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "report.hpp"
#include "scenario.hpp"
#include "series.hpp"

struct apx_scenario {
    apxalg::scenario value;
};

namespace {

thread_local std::string g_last_error;

apx_status fail(apx_status st, const char* what) {
    g_last_error = what;
    return st;
}

template <typename Fn>
apx_status guarded(Fn&& fn) {
    try {
        fn();
        return APX_OK;
    } catch (const apxalg::usage_error& e) {
        return fail(APX_ERROR_USAGE, e.what());
    } catch (const apxalg::validation_error& e) {
        return fail(APX_ERROR_VALIDATION, e.what());
    } catch (const apxalg::internal_error& e) {
        return fail(APX_ERROR_INTERNAL, e.what());
    } catch (const std::bad_alloc&) {
        return fail(APX_ERROR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(APX_ERROR_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

const apxalg::scenario& deref(const apx_scenario* s) {
    if (!s) throw apxalg::usage_error("null scenario handle");
    return s->value;
}

template <typename T>
T* require_out(T* out) {
    if (!out) throw apxalg::usage_error("null output pointer");
    return out;
}

apxalg::render_format to_render_format(apx_format f) {
    switch (f) {
        case APX_FORMAT_TABLE:
            return apxalg::render_format::table;
        case APX_FORMAT_JSON:
            return apxalg::render_format::json;
        case APX_FORMAT_CSV:
            return apxalg::render_format::csv;
    }
    throw apxalg::usage_error("unknown output format code");
}

apx_status make_scenario(apxalg::scenario value, apx_scenario** out) {
    *require_out(out) = new apx_scenario{std::move(value)};
    return APX_OK;
}

}  // namespace

extern "C" {

const char* apx_version(void) { return "1.0.0"; }

const char* apx_last_error(void) { return g_last_error.c_str(); }

void apx_string_free(char* text) { std::free(text); }

apx_status apx_scenario_preset(const char* name, apx_scenario** out) {
    return guarded([&] {
        if (!name) throw apxalg::usage_error("null preset name");
        make_scenario(apxalg::preset_scenario(name), out);
    });
}

apx_status apx_scenario_from_text(const char* json_text, apx_scenario** out) {
    return guarded([&] {
        if (!json_text) throw apxalg::usage_error("null scenario text");
        make_scenario(apxalg::load_scenario_text(json_text), out);
    });
}

apx_status apx_scenario_from_file(const char* path, apx_scenario** out) {
    return guarded([&] {
        if (!path) throw apxalg::usage_error("null scenario path");
        make_scenario(apxalg::load_scenario_file(path), out);
    });
}

apx_status apx_scenario_name(const apx_scenario* s, char** out_text) {
    return guarded([&] { *require_out(out_text) = dup_string(deref(s).name); });
}

apx_status apx_scenario_to_text(const apx_scenario* s, char** out_text) {
    return guarded(
        [&] { *require_out(out_text) = dup_string(apxalg::save_scenario_text(deref(s))); });
}

void apx_scenario_free(apx_scenario* s) { delete s; }

apx_status apx_floor_degree(const apx_scenario* s, uint64_t n, int64_t* out) {
    return guarded([&] { *require_out(out) = deref(s).series.divisor().floor_degree(n); });
}

apx_status apx_dim_piece(const apx_scenario* s, uint64_t n, uint64_t* out) {
    return guarded([&] { *require_out(out) = deref(s).series.dim_piece(n); });
}

apx_status apx_image_dim(const apx_scenario* s, uint64_t p, uint64_t n, uint64_t* out) {
    return guarded([&] { *require_out(out) = deref(s).series.image_dim(p, n); });
}

apx_status apx_approx_ratio(const apx_scenario* s, uint64_t p, uint64_t n, char** out_text) {
    return guarded(
        [&] { *require_out(out_text) = dup_string(deref(s).series.approx_ratio(p, n).str()); });
}

apx_status apx_support_count(const apx_scenario* s, uint64_t n_max, uint64_t* out) {
    return guarded([&] {
        const auto counts = deref(s).series.support_growth(n_max);
        *require_out(out) = counts.back().second;
    });
}

apx_status apx_deficiency(uint64_t p, int64_t* out_deficiency, int* out_within_bounds) {
    return guarded([&] {
        const apxalg::deficiency_result r = apxalg::deficiency_check(p);
        *require_out(out_deficiency) = r.deficiency;
        *require_out(out_within_bounds) = r.ok() ? 1 : 0;
    });
}

apx_status apx_cmd_seq(const apx_scenario* s, uint64_t n, apx_format format, char** out_text) {
    return guarded([&] {
        *require_out(out_text) =
            dup_string(apxalg::render(apxalg::cmd_seq(deref(s), n), to_render_format(format)));
    });
}

apx_status apx_cmd_dim(const apx_scenario* s, uint64_t n, apx_format format, char** out_text) {
    return guarded([&] {
        *require_out(out_text) =
            dup_string(apxalg::render(apxalg::cmd_dim(deref(s), n), to_render_format(format)));
    });
}

apx_status apx_cmd_certify(const apx_scenario* s, const char* epsilon, const uint64_t* p_list,
                           size_t p_count, uint64_t n_max, unsigned threads, apx_format format,
                           char** out_text) {
    return guarded([&] {
        if (!epsilon) throw apxalg::usage_error("null epsilon string");
        if (!p_list && p_count > 0) throw apxalg::usage_error("null p list");
        apxalg::rational eps;
        try {
            eps = apxalg::rational::parse(epsilon);
        } catch (const apxalg::error& e) {
            throw apxalg::usage_error(e.what());
        }
        const std::vector<uint64_t> ps(p_list, p_list + p_count);
        *require_out(out_text) = dup_string(apxalg::render(
            apxalg::cmd_certify(deref(s), eps, ps, n_max, threads), to_render_format(format)));
    });
}

apx_status apx_cmd_support(const apx_scenario* s, uint64_t n_max, apx_format format,
                           char** out_text) {
    return guarded([&] {
        *require_out(out_text) = dup_string(
            apxalg::render(apxalg::cmd_support(deref(s), n_max), to_render_format(format)));
    });
}

apx_status apx_cmd_volume(const apx_scenario* s, uint64_t n_max, unsigned threads,
                          apx_format format, char** out_text) {
    return guarded([&] {
        *require_out(out_text) = dup_string(apxalg::render(
            apxalg::cmd_volume(deref(s), n_max, threads), to_render_format(format)));
    });
}

apx_status apx_cmd_oracle_check(const apx_scenario* s, uint64_t cap, apx_format format,
                                char** out_text, int* out_mismatch) {
    return guarded([&] {
        bool mismatch = false;
        *require_out(out_text) = dup_string(apxalg::render(
            apxalg::cmd_oracle_check(deref(s), cap, &mismatch), to_render_format(format)));
        if (out_mismatch) *out_mismatch = mismatch ? 1 : 0;
    });
}

apx_status apx_cmd_report(const apx_scenario* s, unsigned threads, char** out_text,
                          int* out_mismatch) {
    return guarded([&] {
        bool mismatch = false;
        *require_out(out_text) = dup_string(apxalg::cmd_report(deref(s), threads, &mismatch));
        if (out_mismatch) *out_mismatch = mismatch ? 1 : 0;
    });
}

}  // extern "C"
