int state;

void main()
{
#pragma omp parallel
    {
#pragma omp master
        { state = 1; }
#pragma omp master
        { state = state + 1; }
    }
}
