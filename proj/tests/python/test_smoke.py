import cusemi


def test_version():
    assert cusemi.__version__
