'''
Exceptions raised by the surface_library numerics and file readers.

All of the numerical failures derive from SurfaceError so that a caller
running a long optimization can catch them in one place and record the
reason.
'''
import logging

logger = logging.getLogger(__name__)


class SurfaceError(Exception):
    '''
    Base class for failures of the level set numerics.
    '''
    def __init__(self, message):
        self.message = message
        super(SurfaceError, self).__init__(message)

    def __repr__(self):
        return '{0}("{1}")'.format(self.__class__.__name__, self.message)


class DistortedField(SurfaceError):
    '''
    The embedding function is too far from a distance function near its
    zero level set for the surface quadrature to be trusted.
    '''
    def __init__(self, message, grad_range=None):
        self.grad_range = grad_range
        super(DistortedField, self).__init__(message)

    def __repr__(self):
        return '{0}("{1}", grad_range={2})'.format(self.__class__.__name__,
                                                   self.message,
                                                   self.grad_range)


class EmptySurface(SurfaceError):
    '''
    The zero level set has vanished from the unit cell.
    '''
    pass


class ShapeTooLarge(SurfaceError):
    def __init__(self, message, size=None):
        self.size = size
        super(ShapeTooLarge, self).__init__(message)

    def __repr__(self):
        return '{0}("{1}", size={2})'.format(self.__class__.__name__,
                                             self.message, self.size)


class _NewtonFailure(SurfaceError):
    def __init__(self, message, iterations=None, stage=None):
        self.iterations = iterations
        self.stage = stage
        super(_NewtonFailure, self).__init__(message)

    def __str__(self):
        if self.stage is None:
            return self.message

        return '{0} (continuation stage {1})'.format(self.message,
                                                      self.stage)

    def __repr__(self):
        return ('{0}("{1}", iterations={2}, stage={3})'
                .format(self.__class__.__name__, self.message,
                        self.iterations, self.stage))


class DerivativeVanished(_NewtonFailure):
    '''
    d(volume fraction)/d(lambda) is numerically zero, so the Newton update
    is undefined.
    '''
    pass


class NoConvergence(_NewtonFailure):
    pass


class FieldFileHeaderError(SurfaceError):
    pass


class FieldFileLengthError(SurfaceError):
    pass
