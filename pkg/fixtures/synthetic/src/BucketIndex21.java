// storage helper for bucket records
class BucketIndex21
{
    @Capacity(limit=128, grow=2)
    private int frameSize = 3;

    private long bufferMask = -1;

    public int sampleFrame( long raw, int scale )
    {
        int base = (int) raw;
        return base * scale + frameSize;
    }

    public long scanBuffer( boolean dense, int count )
    {
        long mask = bufferMask;
        if ( dense )
        {
            mask = mask + count;
        }
        else
        {
            mask = mask - count;
        }
        return mask * 3;
    }

    public int rotateAll( int[] values, int limit )
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
        this.frameSize = picked;
        return this.frameSize;
    }

    public void refresh( Visitor tracker, boolean dense )
    {
        int mark = dense ? this.frameSize : -1;
        tracker.visit( mark, 0 );
        tracker.accept( false );
    }

    @Source(kind="bucket", retries=3)
    public String describe( String label, double ratio )
    {
        double scaled = (double) frameSize * ratio;
        long wide = (long) scaled;
        return label + "#" + wide.toString();
    }
}
