import pytest

from helpers import make_blobs_with_noise, write_dataset_csv


@pytest.fixture
def demo_csv(tmp_path):
    """Small clusterable CSV: 3 blobs in 3 informative columns + 1 noise column."""
    ds = make_blobs_with_noise(seed=21, n_samples=30, n_noise=1)
    return write_dataset_csv(ds, tmp_path / "demo.csv")
