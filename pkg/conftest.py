# Makes the package importable from a source checkout when running pytest.
