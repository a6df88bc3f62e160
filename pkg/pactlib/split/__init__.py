from pactlib.split.split_assignment import (SplitAssignment, hash_name, bucket_of, TRAIN, VALID, TEST, BUCKETS,
                                            TRAIN_BOUND, VALID_BOUND)
from pactlib.split.dataset_split import split_dataset, split_manifest, split_file
