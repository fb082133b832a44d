"""Super simple tests that should always work."""


def test_basic_math():
    """Test that basic math works."""
    assert 1 + 1 == 2


def test_can_import_digiplane():
    """Test that we can import the digiplane package."""
    import digiplane
    assert digiplane is not None


def test_digiplane_has_version():
    """Test that digiplane has a version."""
    import digiplane
    assert hasattr(digiplane, '__version__')


def test_networkx_library_available():
    """Test that networkx library is available."""
    import networkx
    assert networkx is not None


def test_can_import_modules():
    """Test that every module imports."""
    from digiplane import afpp, catalog, cli, convexity, core, formats, lines, retraction, viz
    assert all([afpp, catalog, cli, convexity, core, formats, lines, retraction, viz])


def test_public_names():
    """Test that the package re-exports its main entry points."""
    import digiplane
    for name in digiplane.__all__:
        assert hasattr(digiplane, name)
