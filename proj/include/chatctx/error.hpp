#pragma once

#include <stdexcept>
#include <string>

namespace chatctx {

enum class ErrorCode {
    InvalidArgument,        // bad parameters / invalid configuration
    Io,                     // file cannot be opened/read/written
    MalformedPage,          // no message lines extractable from an HTML page
    EmailFormatPage,        // email-style page, excluded at ingestion
    MalformedXml,
    MalformedRecord,        // canonical JSONL record
    MalformedRow,           // scores TSV row
    DuplicateKey,
    ScoreOutOfRange,
    EmptyCorpus,
    EmptyTrainingSet,
    MissingGoldLabel,
    NotPeerToPeer,
    MissingScore,
    EmptyEvaluation,
    DivisionByZeroReference,
    UnknownLabel,
};

const char* error_code_name(ErrorCode code);

// Config errors exit the CLI with 1, data errors with 2.
bool is_config_error(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace chatctx
