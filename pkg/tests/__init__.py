"""faceopt test suite"""
