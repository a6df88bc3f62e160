from pactlib.extract.extraction_config import ExtractionConfig
from pactlib.extract.raw_datapoint import RawDatapoint, FIELDS
from pactlib.extract.pact_extractor import (PactExtractor, premises_of, extract_decl_datapoints, extract_environment,
                                            ingest_raw_json, serialize_raw_json)
