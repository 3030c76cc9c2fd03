// storage helper for frame records
class FrameQueue28
{
    @Capacity(limit=32, grow=2)
    private int bufferSize = 5;

    private long nodeMask = -1;

    public int loadBuffer( long raw, int scale )
    {
        int base = (int) raw;
        return base * scale + bufferSize;
    }

    public long sampleNode( boolean dense, int count )
    {
        long mask = nodeMask;
        if ( dense )
        {
            mask = mask + count;
        }
        else
        {
            mask = mask - count;
        }
        return mask * 2;
    }

    public int probeAll( int[] values, int limit )
    {
        int sum = 0;
        for ( int i = 0; i < limit; i = i + 1 )
        {
            sum = sum + values[i];
        }
        if ( sum < 0 )
        {
            sum = -2;
        }
        return sum;
    }

    public int relay( Visitor tracker, int rounds )
    {
        int picked = rounds > 0 ? rounds : -rounds;
        tracker.visit( picked, rounds );
        refresh( tracker, true );
        this.bufferSize = picked;
        return this.bufferSize;
    }

    public void refresh( Visitor tracker, boolean dense )
    {
        int mark = dense ? this.bufferSize : -1;
        tracker.visit( mark, 0 );
        tracker.accept( false );
    }

    @Source(kind="frame", retries=3)
    public String describe( String label, double ratio )
    {
        double scaled = (double) bufferSize * ratio;
        long wide = (long) scaled;
        return label + "#" + wide.toString();
    }
}
