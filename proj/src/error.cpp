#include "chatctx/error.hpp"

namespace chatctx {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::Io: return "Io";
        case ErrorCode::MalformedPage: return "MalformedPage";
        case ErrorCode::EmailFormatPage: return "EmailFormatPage";
        case ErrorCode::MalformedXml: return "MalformedXml";
        case ErrorCode::MalformedRecord: return "MalformedRecord";
        case ErrorCode::MalformedRow: return "MalformedRow";
        case ErrorCode::DuplicateKey: return "DuplicateKey";
        case ErrorCode::ScoreOutOfRange: return "ScoreOutOfRange";
        case ErrorCode::EmptyCorpus: return "EmptyCorpus";
        case ErrorCode::EmptyTrainingSet: return "EmptyTrainingSet";
        case ErrorCode::MissingGoldLabel: return "MissingGoldLabel";
        case ErrorCode::NotPeerToPeer: return "NotPeerToPeer";
        case ErrorCode::MissingScore: return "MissingScore";
        case ErrorCode::EmptyEvaluation: return "EmptyEvaluation";
        case ErrorCode::DivisionByZeroReference: return "DivisionByZeroReference";
        case ErrorCode::UnknownLabel: return "UnknownLabel";
    }
    return "Unknown";
}

bool is_config_error(ErrorCode code) {
    return code == ErrorCode::InvalidArgument;
}

} // namespace chatctx
